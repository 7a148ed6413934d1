#pragma once

#include "kolchin/binomial_poly.hpp"
#include "kolchin/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kolchin {

/// Invariants of a pair from the invariants of the first component and of
/// the second over the first: the type is the max, and the typical dimension
/// adds exactly when the types agree, otherwise the larger side wins.
InvariantPair pair_combine(const InvariantPair& a, const InvariantPair& b_given_a);

struct SystemKolchin {
    NumericalPolynomial poly;
    std::int64_t threshold = 0;
    bool modulo_constant = true;  // correct up to an additive natural constant
};

/// Sum of the per-variable leader counts. All sets must share the ambient
/// dimension. The result is an ideal-level claim and therefore carries the
/// modulo-constant flag.
SystemKolchin system_kolchin(const std::vector<LeaderSet>& leader_sets);

/// Invariants of omega_G - omega_H. Only valid for coordinate-split
/// quotients where the count is additive; callers with H eventually larger
/// than G get std::invalid_argument.
InvariantPair quotient_invariants(const NumericalPolynomial& omega_G,
                                  const NumericalPolynomial& omega_H);

struct LabeledQuotient {
    std::string label;
    InvariantPair invariants;  // the bottom pair means the quotient is a singleton
};

struct IndecomposabilityResult {
    bool holds = true;
    std::optional<std::string> witness;  // first quotient violating the bound
};

/// Checks tau(X/H) >= n or |X/H| = 1 across the supplied quotient family.
/// The predicate is relative to that family. Quotients of type larger than
/// the ambient polynomial are rejected as inconsistent.
IndecomposabilityResult is_n_indecomposable(const NumericalPolynomial& X,
                                            const std::vector<LabeledQuotient>& quotients,
                                            int n);

struct ConnectednessLevel {
    int level = -1;  // largest n for which the predicate holds
    int tau = -1;    // type of the ambient polynomial
    bool strongly_connected = false;  // level == tau
};

ConnectednessLevel strong_connectedness_level(const NumericalPolynomial& G,
                                              const std::vector<LabeledQuotient>& quotients);

}  // namespace kolchin
