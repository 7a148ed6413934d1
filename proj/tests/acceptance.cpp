// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.
//
// Run with --write-golden to regenerate the frozen factorization report
// after an intentional change to the report format.

#include "kolchin/parser.hpp"
#include "kolchin/reports.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace kolchin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

UnipotentGroupSpec load_spec(const std::string& name) {
    std::ifstream in(std::string(KOLCHIN_SPEC_DIR) + "/" + name);
    nlohmann::json j;
    in >> j;
    return UnipotentGroupSpec::from_json(j);
}

SymPoly sym(int member, int coord, int m) {
    return SymPoly::symbol(
        DerivedSymbol{member, coord, ExponentVector(std::vector<int>(static_cast<size_t>(m), 0))});
}

bool oracle_agrees(const LeaderSet& e) {
    OmegaPolynomial w = omega_E(e);
    for (std::int64_t s = 0; s <= w.threshold + 5; ++s) {
        Int oracle = count_direct(e, s);
        if (omega_exact(e, s) != oracle) return false;
        if (s >= w.threshold && w.poly.evaluate(s) != oracle) return false;
    }
    return true;
}

// ---- criterion 1 -----------------------------------------------------------

void criterion_oracle_equivalence() {
    auto start = Clock::now();
    bool ok = true;
    long cases = 0;

    for (int m = 1; m <= 3 && ok; ++m) {
        std::vector<ExponentVector> points;
        std::function<void(std::vector<int>, int)> gen = [&](std::vector<int> cur, int pos) {
            if (pos == m) {
                points.emplace_back(cur);
                return;
            }
            for (int v = 0; v <= 2; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                gen(cur, pos + 1);
            }
        };
        gen(std::vector<int>(static_cast<size_t>(m), 0), 0);
        const size_t n = points.size();

        auto run_case = [&](std::vector<ExponentVector> pts) {
            if (!ok) return;
            ++cases;
            if (!oracle_agrees(LeaderSet(m, std::move(pts)))) ok = false;
        };

        run_case({});
        for (size_t i = 0; i < n; ++i) {
            run_case({points[i]});
            for (size_t j = i + 1; j < n; ++j) {
                run_case({points[i], points[j]});
                for (size_t k = j + 1; k < n; ++k) {
                    run_case({points[i], points[j], points[k]});
                }
            }
        }
    }

    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> entry(0, 3);
    for (int iter = 0; iter < 200 && ok; ++iter) {
        int m = dim(rng);
        std::vector<ExponentVector> pts;
        int n_points = count(rng);
        for (int i = 0; i < n_points; ++i) {
            std::vector<int> e(static_cast<size_t>(m));
            for (auto& v : e) v = entry(rng);
            pts.emplace_back(std::move(e));
        }
        ++cases;
        if (!oracle_agrees(LeaderSet(m, std::move(pts)))) ok = false;
    }

    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << cases << " leader sets, " << elapsed << " s";
    report(1, "oracle equivalence of count, inclusion-exclusion, and polynomial",
           ok && elapsed < 10.0, detail.str());
}

// ---- criterion 2 -----------------------------------------------------------

void criterion_single_leader_closed_form() {
    bool ok = true;
    for (int m = 1; m <= 3 && ok; ++m) {
        std::vector<ExponentVector> leaders;
        std::function<void(std::vector<int>, int, int)> gen = [&](std::vector<int> cur, int pos,
                                                                  int left) {
            if (pos == m) {
                leaders.emplace_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                gen(cur, pos + 1, left - v);
            }
        };
        gen(std::vector<int>(static_cast<size_t>(m), 0), 0, 6);
        for (const auto& v : leaders) {
            NumericalPolynomial closed = omega_single_leader(v);
            if (v.is_zero()) {
                if (!closed.is_zero()) ok = false;
                continue;
            }
            if (closed != omega_E(LeaderSet(m, {v})).poly) ok = false;
            InvariantPair inv = invariants_of(closed);
            if (inv.tau != m - 1 || inv.alpha != v.ord()) ok = false;
        }
    }
    report(2, "single-leader closed form has invariants (m-1, ord)", ok);
}

// ---- criterion 3 -----------------------------------------------------------

void criterion_subgroup_types() {
    Definitions defs = parse_definitions(2, {"c2=x1"});
    bool ok = true;

    auto check_group = [&](const std::string& text, const Int& expected_alpha) {
        DiffOperator op = parse_operator(text, 2, defs);
        LeaderSet e(2, {op.leader()});
        OmegaPolynomial w = omega_E(e);
        InvariantPair inv = invariants_of(w.poly);
        if (inv.tau != 1 || inv.alpha != expected_alpha) ok = false;
        if (!oracle_agrees(e)) ok = false;
    };

    check_group("d1^2 - d2", 2);
    check_group("d1 - c2*d2", 1);
    report(3, "the two displayed subgroups have type 1 with dimensions 2 and 1", ok);
}

// ---- criterion 4 -----------------------------------------------------------

DiffOperator random_operator(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> cv(-3, 3);
    DiffOperator op(2);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int e1 = exp(rng);
        int e2 = std::min(exp(rng), 2 - e1);
        MultiPoly p(2);
        for (int term = 0; term < 2; ++term) {
            p = p + MultiPoly::monomial(2, {exp(rng), exp(rng)}, Rat(cv(rng)));
        }
        if (p.is_zero()) p = MultiPoly::constant(2, Rat(1));
        op = op + DiffOperator::monomial(2, ExponentVector{e1, e2}, RatFunc(p));
    }
    return op;
}

void criterion_operator_soundness() {
    auto start = Clock::now();
    std::mt19937 rng(8128);
    bool ok = true;
    for (int iter = 0; iter < 120 && ok; ++iter) {
        DiffOperator a = random_operator(rng);
        DiffOperator b = random_operator(rng);
        DiffOperator c = random_operator(rng);
        if ((a * b) * c != a * (b * c)) ok = false;

        MultiPoly p(2);
        std::uniform_int_distribution<int> exp(0, 2);
        std::uniform_int_distribution<long> cv(-3, 3);
        for (int term = 0; term < 3; ++term) {
            p = p + MultiPoly::monomial(2, {exp(rng), exp(rng)}, Rat(cv(rng)));
        }
        RatFunc f(p);
        if ((a * b).apply(f) != a.apply(b.apply(f))) ok = false;
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "120 triples, " << elapsed << " s";
    report(4, "composition is associative and compatible with application",
           ok && elapsed < 5.0, detail.str());
}

// ---- criterion 5 -----------------------------------------------------------

std::string factorization_golden_report() {
    Definitions defs = parse_definitions(2, {"c2=x1"});
    DiffOperator target = parse_operator(
        "c2*d1^3 - c2*d1^2*d2 - 2*c2*d1*d2 + c2^2*d2^2 + 2*d2", 2, defs);
    std::vector<std::pair<std::string, std::vector<std::string>>> displays = {
        {"first display", {"c2*d1 - c2^2*d2 - 2", "d1^2 - d2"}},
        {"second display", {"c2*d1^2 - c2*d2 - 2*d1", "d1 - c2*d2"}},
    };
    nlohmann::ordered_json out;
    for (const auto& [label, texts] : displays) {
        std::vector<DiffOperator> factors;
        for (const auto& text : texts) factors.push_back(parse_operator(text, 2, defs));
        out[label] = reports::factorization_report(target, factors);
    }
    return out.dump(2) + "\n";
}

void criterion_factorization_adjudication(bool write_golden) {
    const std::string path =
        std::string(KOLCHIN_GOLDEN_DIR) + "/example48_factorization.json";
    std::string produced = factorization_golden_report();
    std::string again = factorization_golden_report();

    if (write_golden) {
        std::ofstream out(path);
        out << produced;
        std::cout << "wrote " << path << "\n";
    }

    std::string golden = read_file(path);
    bool stable = produced == again;
    bool matches = !golden.empty() && produced == golden;
    report(5, "factorization adjudication report is deterministic and frozen",
           stable && matches,
           matches ? "byte-identical to the golden file" : "golden file mismatch");
}

// ---- criterion 6 -----------------------------------------------------------

void criterion_heisenberg_commutator() {
    UnipotentGroupSpec spec = load_spec("heisenberg.json");
    SymbolicElement c = commutator(generic_element(spec, 0), generic_element(spec, 1));
    bool ok = c.at(1, 2).is_zero() && c.at(2, 3).is_zero();
    SymPoly corner = sym(0, 0, 2) * sym(1, 2, 2) - sym(1, 0, 2) * sym(0, 2, 2);
    ok = ok && c.at(1, 3) == corner;
    report(6, "Heisenberg commutator is the displayed corner matrix", ok);
}

// ---- criterion 7 -----------------------------------------------------------

void criterion_group_law() {
    UnipotentGroupSpec spec = load_spec("unipotent4x4.json");
    const int m = spec.m;
    SymbolicElement p = multiply(generic_element(spec, 0), generic_element(spec, 1));
    bool ok = true;
    ok = ok && p.at(1, 2) == sym(0, 0, m) + sym(1, 0, m);
    ok = ok && p.at(1, 3) == sym(0, 1, m) + sym(0, 0, m) * sym(1, 3, m) + sym(1, 1, m);
    ok = ok && p.at(1, 4) == sym(1, 2, m) + sym(0, 0, m) * sym(1, 4, m) +
                                 sym(0, 1, m) * sym(1, 5, m) + sym(0, 2, m);
    ok = ok && p.at(2, 3) == sym(0, 3, m) + sym(1, 3, m);
    ok = ok && p.at(2, 4) == sym(0, 4, m) + sym(0, 3, m) * sym(1, 5, m) + sym(1, 4, m);
    ok = ok && p.at(3, 4) == sym(0, 5, m) + sym(1, 5, m);

    ok = ok && check_closure(spec, ConstraintMode::Componentwise).ok;
    ClosureReport literal = check_closure(spec, ConstraintMode::LiteralComposed);
    ok = ok && !literal.ok && literal.violation.has_value() &&
         literal.violation->row == 1 && literal.violation->col == 3 &&
         !literal.violation->residual.is_zero();
    report(7, "4x4 group law matches the display; closure componentwise, violation literal", ok);
}

// ---- criterion 8 -----------------------------------------------------------

void criterion_component_chain() {
    auto start = Clock::now();
    UnipotentGroupSpec spec = load_spec("unipotent4x4.json");
    auto names = [&](const ComponentResult& r) {
        std::vector<std::string> out;
        for (int idx : r.killed) out.push_back(spec.coords[static_cast<size_t>(idx)].name);
        return out;
    };

    ComponentResult n1 = n_connected_component(spec, 1);
    ComponentResult n2 = n_connected_component(spec, 2);
    ComponentResult n3 = n_connected_component(spec, 3);

    bool ok = names(n1) == std::vector<std::string>{"u123"};
    ok = ok && names(n2) == std::vector<std::string>{"u12", "u123", "u23"};
    ok = ok && names(n3) == std::vector<std::string>{"u12", "u1", "u123", "u2", "u23"};

    // the audit carries quotient invariants for every kept subgroup
    for (const auto& result : {n1, n2, n3}) {
        bool any_kept = false;
        for (const auto& cand : result.audit) {
            if (!cand.kept) continue;
            any_kept = true;
            if (!valid_invariants(cand.quotient)) ok = false;
            if (cand.quotient.tau >= result.n) ok = false;
        }
        if (!any_kept) ok = false;
    }

    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << elapsed << " s";
    report(8, "n-connected components reproduce the displayed chain", ok && elapsed < 5.0,
           detail.str());
}

// ---- criterion 9 -----------------------------------------------------------

void criterion_invariant_calculus() {
    bool ok = true;
    std::vector<InvariantPair> grid{{-1, 0}};
    for (int tau = 0; tau <= 3; ++tau) {
        for (long alpha = 1; alpha <= 5; ++alpha) grid.push_back({tau, alpha});
    }
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            InvariantPair c = pair_combine(a, b);
            if (c.tau != std::max(a.tau, b.tau)) ok = false;
            if (a.tau == b.tau && c.alpha != a.alpha + b.alpha) ok = false;
            if (a.tau > b.tau && c != a) ok = false;
            if (a.tau < b.tau && c != b) ok = false;
        }
    }

    std::mt19937 rng(4096);
    std::uniform_int_distribution<int> tau(-1, 3);
    std::uniform_int_distribution<long> alpha(1, 4);
    std::uniform_int_distribution<int> size(0, 6);
    NumericalPolynomial x = NumericalPolynomial::from_binomial_coeffs(
        {Int(0), Int(0), Int(0), Int(2)});
    for (int iter = 0; iter < 300 && ok; ++iter) {
        std::vector<LabeledQuotient> family;
        int n_quotients = size(rng);
        for (int i = 0; i < n_quotients; ++i) {
            int t = tau(rng);
            family.push_back({"H" + std::to_string(i),
                              t < 0 ? InvariantPair{-1, 0} : InvariantPair{t, alpha(rng)}});
        }
        bool prev = true;
        for (int n = 0; n <= 4; ++n) {
            bool now = is_n_indecomposable(x, family, n).holds;
            if (!prev && now) ok = false;
            prev = now;
        }
    }
    report(9, "pair combination and n-indecomposability behave per the calculus", ok);
}

}  // namespace

int main(int argc, char** argv) {
    bool write_golden = argc > 1 && std::string(argv[1]) == "--write-golden";

    criterion_oracle_equivalence();
    criterion_single_leader_closed_form();
    criterion_subgroup_types();
    criterion_operator_soundness();
    criterion_factorization_adjudication(write_golden);
    criterion_heisenberg_commutator();
    criterion_group_law();
    criterion_component_chain();
    criterion_invariant_calculus();

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
    } else {
        std::cout << failures << " acceptance criteria FAILED\n";
    }
    return failures;
}
