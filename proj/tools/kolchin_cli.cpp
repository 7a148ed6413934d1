// Command-line front end for the differential-algebra toolkit: Kolchin
// polynomials of leader sets, differential type and typical dimension,
// operator composition and factorization checking, and symbolic unipotent
// group calculations.
//
// Exit codes: 0 success (or verified Match/Ok), 1 failed verification
// (Mismatch/Violation/oracle discrepancy), 2 parse or configuration errors.

#include "kolchin/parser.hpp"
#include "kolchin/reports.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using kolchin::reports::Json;

struct Output {
    std::string command;
    Json report;
    bool json = false;

    int emit() const {
        if (json) {
            std::cout << report.dump() << "\n";
        } else {
            std::cout << kolchin::reports::render_text(command, report);
        }
        return kolchin::reports::exit_code(command, report);
    }
};

kolchin::UnipotentGroupSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
    nlohmann::json j;
    in >> j;
    return kolchin::UnipotentGroupSpec::from_json(j);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::int64_t v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

std::vector<std::string> split_members(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (out.size() < 2) throw std::invalid_argument("--members needs two comma-separated names");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential-algebra calculator: Kolchin polynomials, linear "
                 "differential operators, unipotent group laws"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit the machine-readable JSON report");

    // omega
    auto* omega = app.add_subcommand("omega", "Kolchin polynomial of a leader set");
    int omega_m = 0;
    std::string omega_leaders;
    omega->add_option("--m", omega_m, "number of derivations")->required();
    omega->add_option("--leaders", omega_leaders, "leader set, e.g. \"(2,0);(1,1)\"");

    // invariants
    auto* invariants = app.add_subcommand(
        "invariants", "differential type and typical dimension");
    int inv_m = 0;
    std::string inv_coeffs;
    std::vector<std::string> inv_leaders;
    invariants->add_option("--coeffs", inv_coeffs, "binomial-basis coefficients, e.g. \"-1,2\"");
    invariants->add_option("--m", inv_m, "number of derivations (with --leaders)");
    invariants->add_option("--leaders", inv_leaders,
                           "leader set per variable (repeatable; assembled as a system)")
        ->type_size(1)
        ->allow_extra_args(false);

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "brute-force count vs. inclusion-exclusion vs. polynomial");
    int oracle_m = 0;
    std::string oracle_leaders, oracle_range = "0..5";
    oracle->add_option("--m", oracle_m, "number of derivations")->required();
    oracle->add_option("--leaders", oracle_leaders, "leader set");
    oracle->add_option("--s", oracle_range, "order range lo..hi");

    // shared operator options
    int op_m = 0;
    std::vector<std::string> defines;
    auto add_operator_options = [&](CLI::App* cmd) {
        cmd->add_option("--m", op_m, "number of derivations")->required();
        cmd->add_option("--define", defines, "coefficient alias name=expr (repeatable)")
            ->type_size(1)
        ->allow_extra_args(false);
    };

    auto* compose = app.add_subcommand("compose", "compose operators left to right");
    std::vector<std::string> compose_exprs;
    add_operator_options(compose);
    compose->add_option("exprs", compose_exprs, "operator expressions")->required()->expected(-1);

    auto* apply = app.add_subcommand("apply", "apply an operator to a coefficient");
    std::string apply_op, apply_to;
    add_operator_options(apply);
    apply->add_option("expr", apply_op, "operator expression")->required();
    apply->add_option("--to", apply_to, "argument expression")->required();

    auto* leader = app.add_subcommand("leader", "leader under the orderly ranking");
    std::string leader_expr;
    add_operator_options(leader);
    leader->add_option("expr", leader_expr, "operator expression")->required();

    auto* verify = app.add_subcommand("verify-factorization",
                                      "check a claimed operator factorization both ways");
    std::string verify_target;
    std::vector<std::string> verify_factors;
    add_operator_options(verify);
    verify->add_option("--target", verify_target, "the operator being factored")->required();
    verify->add_option("--factor", verify_factors, "factor (repeatable, in display order)")
        ->required()
        ->type_size(1)
        ->allow_extra_args(false);

    // group commands
    auto* group_check = app.add_subcommand("group-check",
                                           "closure of a unipotent shape under its constraints");
    std::string gc_spec, gc_mode, gc_members = "u,h";
    group_check->add_option("--spec", gc_spec, "spec file (JSON)")->required();
    group_check->add_option("--mode", gc_mode, "componentwise|literal (overrides the file)");
    group_check->add_option("--members", gc_members, "member name prefixes");

    auto* comm = app.add_subcommand("commutator", "commutator of two generic members");
    std::string comm_spec, comm_members = "u,v";
    comm->add_option("--spec", comm_spec, "spec file (JSON)")->required();
    comm->add_option("--members", comm_members, "member name prefixes");

    auto* component = app.add_subcommand("connected-component",
                                         "n-connected component over coordinate-kill subgroups");
    std::string comp_spec;
    int comp_n = 0;
    component->add_option("--spec", comp_spec, "spec file (JSON)")->required();
    component->add_option("--n", comp_n, "connectedness level")->required();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();  // let --json appear after the subcommand name
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        out.json = json;

        if (omega->parsed()) {
            out.command = "omega";
            out.report = kolchin::reports::omega_report(
                kolchin::parse_leader_set(omega_m, omega_leaders));
        } else if (invariants->parsed()) {
            out.command = "invariants";
            if (!inv_coeffs.empty() && !inv_leaders.empty()) {
                throw std::invalid_argument("pass either --coeffs or --leaders, not both");
            }
            if (!inv_coeffs.empty()) {
                std::vector<kolchin::Int> coeffs;
                std::stringstream ss(inv_coeffs);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    item.erase(0, item.find_first_not_of(" \t"));
                    item.erase(item.find_last_not_of(" \t") + 1);
                    coeffs.emplace_back(item);
                }
                out.report = kolchin::reports::invariants_from_coeffs(coeffs);
            } else if (!inv_leaders.empty()) {
                std::vector<kolchin::LeaderSet> systems;
                for (const auto& text : inv_leaders) {
                    systems.push_back(kolchin::parse_leader_set(inv_m, text));
                }
                out.report = kolchin::reports::invariants_from_systems(systems);
            } else {
                throw std::invalid_argument("invariants needs --coeffs or --leaders");
            }
        } else if (oracle->parsed()) {
            out.command = "oracle";
            auto [lo, hi] = parse_range(oracle_range);
            out.report = kolchin::reports::oracle_report(
                kolchin::parse_leader_set(oracle_m, oracle_leaders), lo, hi);
        } else if (compose->parsed()) {
            out.command = "compose";
            auto defs = kolchin::parse_definitions(op_m, defines);
            std::vector<kolchin::DiffOperator> ops;
            for (const auto& text : compose_exprs) {
                ops.push_back(kolchin::parse_operator(text, op_m, defs));
            }
            out.report = kolchin::reports::compose_report(ops);
        } else if (apply->parsed()) {
            out.command = "apply";
            auto defs = kolchin::parse_definitions(op_m, defines);
            out.report = kolchin::reports::apply_report(
                kolchin::parse_operator(apply_op, op_m, defs),
                kolchin::parse_coefficient(apply_to, op_m, defs));
        } else if (leader->parsed()) {
            out.command = "leader";
            auto defs = kolchin::parse_definitions(op_m, defines);
            out.report = kolchin::reports::leader_report(
                kolchin::parse_operator(leader_expr, op_m, defs));
        } else if (verify->parsed()) {
            out.command = "verify-factorization";
            auto defs = kolchin::parse_definitions(op_m, defines);
            std::vector<kolchin::DiffOperator> factors;
            for (const auto& text : verify_factors) {
                factors.push_back(kolchin::parse_operator(text, op_m, defs));
            }
            out.report = kolchin::reports::factorization_report(
                kolchin::parse_operator(verify_target, op_m, defs), factors);
        } else if (group_check->parsed()) {
            out.command = "group-check";
            auto spec = load_spec(gc_spec);
            kolchin::ConstraintMode mode =
                gc_mode.empty() ? spec.mode : kolchin::constraint_mode_from_string(gc_mode);
            out.report =
                kolchin::reports::group_check_report(spec, mode, split_members(gc_members));
        } else if (comm->parsed()) {
            out.command = "commutator";
            out.report = kolchin::reports::commutator_report(load_spec(comm_spec),
                                                             split_members(comm_members));
        } else if (component->parsed()) {
            out.command = "connected-component";
            out.report = kolchin::reports::component_report(load_spec(comp_spec), comp_n);
        }
        return out.emit();
    } catch (const kolchin::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
