#include "kolchin/reports.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kolchin::reports {

namespace {

Json invariants_json(const InvariantPair& inv, bool exact) {
    Json j;
    j["tau"] = inv.tau;
    j["alpha"] = to_int64(inv.alpha);
    j["exact"] = exact;
    return j;
}

std::vector<std::int64_t> coeffs_to_json(const NumericalPolynomial& p) {
    std::vector<std::int64_t> out;
    for (const auto& c : p.binomial_coeffs()) out.push_back(to_int64(c));
    return out;
}

NumericalPolynomial poly_from_report(const Json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("binomial_coeffs")) {
        coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    }
    return NumericalPolynomial::from_binomial_coeffs(std::move(coeffs));
}

}  // namespace

Json omega_report(const LeaderSet& leaders) {
    OmegaPolynomial w = omega_E(leaders);
    InvariantPair inv = invariants_of(w.poly);
    Json j;
    j["binomial_coeffs"] = coeffs_to_json(w.poly);
    j["tau"] = inv.tau;
    j["alpha"] = to_int64(inv.alpha);
    j["threshold"] = w.threshold;
    j["exact"] = true;  // a pure lattice count, no ideal-level constant involved
    return j;
}

Json invariants_from_coeffs(const std::vector<Int>& coeffs) {
    NumericalPolynomial p = NumericalPolynomial::from_binomial_coeffs(coeffs);
    return invariants_json(invariants_of(p), true);
}

Json invariants_from_systems(const std::vector<LeaderSet>& systems) {
    SystemKolchin sys = system_kolchin(systems);
    return invariants_json(invariants_of(sys.poly), !sys.modulo_constant);
}

Json oracle_report(const LeaderSet& leaders, std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("oracle: bad range");
    OmegaPolynomial w = omega_E(leaders);
    Json j;
    j["m"] = leaders.dim();
    j["leaders"] = leaders.to_text();
    j["points"] = Json::array();
    for (const auto& p : leaders.points()) j["points"].push_back(p.entries);
    j["binomial_coeffs"] = coeffs_to_json(w.poly);
    j["threshold"] = w.threshold;
    bool consistent = true;
    Json rows = Json::array();
    for (std::int64_t s = lo; s <= hi; ++s) {
        Int count = count_direct(leaders, s);
        Int exact = omega_exact(leaders, s);
        Int poly = w.poly.evaluate(s);
        Json row;
        row["s"] = s;
        row["count"] = to_int64(count);
        row["exact"] = to_int64(exact);
        row["poly"] = to_int64(poly);
        row["agree"] = count == poly;
        consistent = consistent && count == exact;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["consistent"] = consistent;
    return j;
}

Json operator_json(const DiffOperator& op) {
    Json j;
    j["m"] = op.derivations();
    j["order"] = op.order();
    Json terms = Json::array();
    for (const auto& [theta, c] : op.terms()) {
        Json term;
        term["exps"] = theta.entries;
        term["coeff"] = c.to_string();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

namespace {

// Rebuild the canonical text form from the term list; this mirrors
// DiffOperator::to_string but works off the report alone.
std::string operator_text(const Json& op_json) {
    const auto& terms = op_json.at("terms");
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms) {
        std::string coeff = term.at("coeff").get<std::string>();
        std::ostringstream mono;
        bool any = false;
        int i = 0;
        for (const auto& e : term.at("exps")) {
            ++i;
            int exp = e.get<int>();
            if (exp == 0) continue;
            if (any) mono << "*";
            mono << "d" << i;
            if (exp > 1) mono << "^" << exp;
            any = true;
        }
        bool negative = false;
        std::string body;
        bool simple = coeff.find(" ") == std::string::npos && coeff.find("/(") == std::string::npos;
        if (simple && !coeff.empty() && coeff[0] == '-') {
            negative = true;
            coeff = coeff.substr(1);
        }
        if (!any) {
            body = simple ? coeff : "(" + coeff + ")";
        } else if (coeff == "1" && simple) {
            body = mono.str();
        } else if (simple) {
            body = coeff + "*" + mono.str();
        } else {
            body = "(" + coeff + ")*" + mono.str();
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

}  // namespace

Json compose_report(const std::vector<DiffOperator>& factors) {
    DiffOperator composed = compose_sequence(factors, CompositionOrder::LeftToRight);
    Json j;
    j["m"] = composed.derivations();
    j["result"] = operator_json(composed);
    return j;
}

Json apply_report(const DiffOperator& op, const RatFunc& argument) {
    Json j;
    j["m"] = op.derivations();
    j["result"] = op.apply(argument).to_string();
    return j;
}

Json leader_report(const DiffOperator& op) {
    ExponentVector lead = op.leader();
    Json j;
    j["m"] = op.derivations();
    j["exps"] = lead.entries;
    j["ord"] = lead.ord();
    return j;
}

Json factorization_report(const DiffOperator& target,
                          const std::vector<DiffOperator>& factors) {
    FactorizationCheck check = verify_factorization(target, factors);
    Json j;
    j["m"] = target.derivations();
    j["target"] = operator_json(target);
    Json fs = Json::array();
    for (const auto& f : factors) fs.push_back(operator_json(f));
    j["factors"] = std::move(fs);

    auto side = [](bool match, const DiffOperator& product, const DiffOperator& residual) {
        Json s;
        s["match"] = match;
        s["product"] = operator_json(product);
        s["residual"] = operator_json(residual);
        return s;
    };
    j["left_to_right"] = side(check.match_ltr, check.product_ltr, check.residual_ltr);
    j["right_to_left"] = side(check.match_rtl, check.product_rtl, check.residual_rtl);
    j["match"] = check.match_ltr && check.match_rtl ? "both"
                 : check.match_ltr                  ? "left-to-right"
                 : check.match_rtl                  ? "right-to-left"
                                                    : "none";
    return j;
}

Json group_check_report(const UnipotentGroupSpec& spec, ConstraintMode mode,
                        const std::vector<std::string>& members) {
    ClosureReport report = check_closure(spec, mode);
    Json j;
    j["k"] = spec.k;
    j["m"] = spec.m;
    j["mode"] = to_string(mode);
    j["ok"] = report.ok;
    if (!report.ok) {
        const SymbolNames names = member_names(spec, members);
        Json v;
        v["row"] = report.violation->row;
        v["col"] = report.violation->col;
        v["constraint"] = report.violation->constraint;
        v["residual"] = report.violation->residual.to_string(names);
        j["violation"] = std::move(v);
    }
    return j;
}

Json commutator_report(const UnipotentGroupSpec& spec,
                       const std::vector<std::string>& members) {
    spec.validate();
    if (members.size() < 2) throw std::invalid_argument("commutator: two member names required");
    const SymbolicElement result =
        commutator(generic_element(spec, 0), generic_element(spec, 1));
    const SymbolNames names = member_names(spec, members);
    Json j;
    j["k"] = spec.k;
    j["m"] = spec.m;
    j["members"] = std::vector<std::string>(members.begin(), members.begin() + 2);
    Json matrix = Json::array();
    for (int r = 1; r <= spec.k; ++r) {
        Json row = Json::array();
        for (int c = 1; c <= spec.k; ++c) {
            row.push_back(result.at(r, c).to_string(names));
        }
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    return j;
}

Json component_report(const UnipotentGroupSpec& spec, int n) {
    ComponentResult result = n_connected_component(spec, n);
    Json j;
    j["n"] = n;
    j["family"] = "coordinate-kill";
    std::vector<std::string> killed_names;
    for (int idx : result.killed) killed_names.push_back(spec.coords[static_cast<size_t>(idx)].name);
    j["killed"] = killed_names;
    std::vector<std::string> free_names;
    for (size_t i = 0; i < spec.coords.size(); ++i) {
        if (std::find(result.killed.begin(), result.killed.end(), static_cast<int>(i)) ==
            result.killed.end()) {
            free_names.push_back(spec.coords[i].name);
        }
    }
    j["free"] = free_names;
    Json audit = Json::array();
    for (const auto& cand : result.audit) {
        Json row;
        std::vector<std::string> kill;
        for (int idx : cand.killed) kill.push_back(spec.coords[static_cast<size_t>(idx)].name);
        row["kill"] = kill;
        row["is_subgroup"] = cand.is_subgroup;
        row["is_normal"] = cand.is_normal;
        row["tau"] = cand.quotient.tau;
        row["alpha"] = to_int64(cand.quotient.alpha);
        row["kept"] = cand.kept;
        audit.push_back(std::move(row));
    }
    j["audit"] = std::move(audit);
    return j;
}

std::string render_text(const std::string& command, const Json& j) {
    std::ostringstream os;
    if (command == "omega") {
        os << "omega(t) = " << poly_from_report(j).to_string() << "\n";
        os << "tau = " << j.at("tau").get<int>() << ", alpha = "
           << j.at("alpha").get<std::int64_t>() << "\n";
        os << "polynomial exact for s >= " << j.at("threshold").get<std::int64_t>() << "\n";
        os << (j.at("exact").get<bool>() ? "exact count" : "correct modulo an additive constant")
           << "\n";
    } else if (command == "invariants") {
        os << "tau = " << j.at("tau").get<int>() << ", alpha = "
           << j.at("alpha").get<std::int64_t>() << "\n";
        os << (j.at("exact").get<bool>() ? "exact" : "correct modulo an additive constant")
           << "\n";
    } else if (command == "oracle") {
        os << "omega(t) = " << poly_from_report(j).to_string() << "   (exact for s >= "
           << j.at("threshold").get<std::int64_t>() << ")\n";
        os << "s\tcount\texact\tpoly\tagree\n";
        for (const auto& row : j.at("rows")) {
            os << row.at("s").get<std::int64_t>() << "\t" << row.at("count").get<std::int64_t>()
               << "\t" << row.at("exact").get<std::int64_t>() << "\t"
               << row.at("poly").get<std::int64_t>() << "\t"
               << (row.at("agree").get<bool>() ? "yes" : "no") << "\n";
        }
        os << (j.at("consistent").get<bool>() ? "count and inclusion-exclusion agree everywhere"
                                              : "DISCREPANCY between count and inclusion-exclusion")
           << "\n";
    } else if (command == "compose") {
        os << operator_text(j.at("result")) << "\n";
    } else if (command == "apply") {
        os << j.at("result").get<std::string>() << "\n";
    } else if (command == "leader") {
        os << "leader exponents = (";
        const auto& exps = j.at("exps");
        for (size_t i = 0; i < exps.size(); ++i) {
            if (i) os << ",";
            os << exps[i].get<int>();
        }
        os << "), ord = " << j.at("ord").get<int>() << "\n";
    } else if (command == "verify-factorization") {
        os << "target   = " << operator_text(j.at("target")) << "\n";
        int idx = 0;
        for (const auto& f : j.at("factors")) {
            os << "factor " << ++idx << " = " << operator_text(f) << "\n";
        }
        for (const char* key : {"left_to_right", "right_to_left"}) {
            const auto& side = j.at(key);
            os << key << ": " << (side.at("match").get<bool>() ? "Match" : "Mismatch") << "\n";
            os << "  product  = " << operator_text(side.at("product")) << "\n";
            if (!side.at("match").get<bool>()) {
                os << "  residual = " << operator_text(side.at("residual")) << "\n";
            }
        }
        os << "verdict: " << j.at("match").get<std::string>() << "\n";
    } else if (command == "group-check") {
        os << "mode = " << j.at("mode").get<std::string>() << "\n";
        if (j.at("ok").get<bool>()) {
            os << "Ok: the product satisfies every coordinate constraint\n";
        } else {
            const auto& v = j.at("violation");
            os << "Violation at entry (" << v.at("row").get<int>() << ","
               << v.at("col").get<int>() << ") under " << v.at("constraint").get<std::string>()
               << ":\n  residual = " << v.at("residual").get<std::string>() << "\n";
        }
    } else if (command == "commutator") {
        for (const auto& row : j.at("matrix")) {
            os << "[ ";
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << " | ";
                os << row[i].get<std::string>();
            }
            os << " ]\n";
        }
    } else if (command == "connected-component") {
        os << j.at("n").get<int>() << "-connected component relative to the "
           << j.at("family").get<std::string>() << " family\n";
        os << "killed coordinates:";
        for (const auto& name : j.at("killed")) os << " " << name.get<std::string>();
        os << "\nfree coordinates:";
        for (const auto& name : j.at("free")) os << " " << name.get<std::string>();
        os << "\naudit:\n";
        for (const auto& row : j.at("audit")) {
            os << "  kill {";
            const auto& kill = row.at("kill");
            for (size_t i = 0; i < kill.size(); ++i) {
                if (i) os << ",";
                os << kill[i].get<std::string>();
            }
            os << "}: subgroup=" << (row.at("is_subgroup").get<bool>() ? "yes" : "no")
               << " normal=" << (row.at("is_normal").get<bool>() ? "yes" : "no")
               << " quotient tau=" << row.at("tau").get<int>()
               << " alpha=" << row.at("alpha").get<std::int64_t>()
               << " kept=" << (row.at("kept").get<bool>() ? "yes" : "no") << "\n";
        }
    } else {
        throw std::invalid_argument("render_text: unknown command '" + command + "'");
    }
    return os.str();
}

int exit_code(const std::string& command, const Json& j) {
    if (command == "verify-factorization") {
        return j.at("match").get<std::string>() == "none" ? 1 : 0;
    }
    if (command == "group-check") return j.at("ok").get<bool>() ? 0 : 1;
    if (command == "oracle") return j.at("consistent").get<bool>() ? 0 : 1;
    return 0;
}

}  // namespace kolchin::reports
