#include "kolchin/invariants.hpp"

#include <stdexcept>

namespace kolchin {

namespace {
void require_valid(const InvariantPair& p, const char* who) {
    if (!valid_invariants(p)) {
        throw std::invalid_argument(std::string(who) + ": malformed invariant pair");
    }
}
}  // namespace

InvariantPair pair_combine(const InvariantPair& a, const InvariantPair& b_given_a) {
    require_valid(a, "pair_combine");
    require_valid(b_given_a, "pair_combine");
    if (a.tau == b_given_a.tau) {
        return InvariantPair{a.tau, a.alpha + b_given_a.alpha};
    }
    return a.tau > b_given_a.tau ? a : b_given_a;
}

SystemKolchin system_kolchin(const std::vector<LeaderSet>& leader_sets) {
    if (leader_sets.empty()) {
        throw std::invalid_argument("system_kolchin: no leader sets");
    }
    const int m = leader_sets.front().dim();
    SystemKolchin out;
    for (const auto& e : leader_sets) {
        if (e.dim() != m) {
            throw std::invalid_argument("system_kolchin: mixed ambient dimensions");
        }
        OmegaPolynomial w = omega_E(e);
        out.poly = out.poly + w.poly;
        out.threshold = std::max(out.threshold, w.threshold);
    }
    out.modulo_constant = true;
    return out;
}

InvariantPair quotient_invariants(const NumericalPolynomial& omega_G,
                                  const NumericalPolynomial& omega_H) {
    if (compare_eventual(omega_G, omega_H).order == EventualOrder::Less) {
        throw std::invalid_argument(
            "quotient_invariants: omega_H eventually dominates omega_G");
    }
    return invariants_of(omega_G - omega_H);
}

IndecomposabilityResult is_n_indecomposable(const NumericalPolynomial& X,
                                            const std::vector<LabeledQuotient>& quotients,
                                            int n) {
    if (n < 0) throw std::invalid_argument("is_n_indecomposable: negative n");
    const int ambient_tau = X.is_zero() ? -1 : invariants_of(X).tau;
    for (const auto& q : quotients) {
        require_valid(q.invariants, "is_n_indecomposable");
        if (q.invariants.tau > ambient_tau) {
            throw std::invalid_argument("is_n_indecomposable: quotient type exceeds ambient type (" +
                                        q.label + ")");
        }
    }
    for (const auto& q : quotients) {
        if (q.invariants.is_trivial()) continue;  // singleton quotient
        if (q.invariants.tau < n) return {false, q.label};
    }
    return {true, std::nullopt};
}

ConnectednessLevel strong_connectedness_level(const NumericalPolynomial& G,
                                              const std::vector<LabeledQuotient>& quotients) {
    ConnectednessLevel out;
    out.tau = G.is_zero() ? -1 : invariants_of(G).tau;
    for (int n = 0; n <= out.tau; ++n) {
        if (!is_n_indecomposable(G, quotients, n).holds) break;
        out.level = n;
    }
    out.strongly_connected = out.level == out.tau;
    return out;
}

}  // namespace kolchin
