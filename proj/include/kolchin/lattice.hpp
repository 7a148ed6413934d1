#pragma once

#include "kolchin/binomial_poly.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kolchin {

/// Multi-index of a derivative monomial d1^e1 * ... * dm^em.
struct ExponentVector {
    std::vector<int> entries;

    ExponentVector() = default;
    ExponentVector(std::initializer_list<int> e);
    explicit ExponentVector(std::vector<int> e);

    int dim() const { return static_cast<int>(entries.size()); }
    int ord() const;
    bool is_zero() const;
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; }

    bool operator==(const ExponentVector&) const = default;
    std::string to_string() const;  // "(2,0)"
};

/// Unit vector in the given direction (1-based).
ExponentVector unit_vector(int m, int direction);

/// v >= w componentwise (the product order).
bool dominates(const ExponentVector& v, const ExponentVector& w);

/// Orderly ranking: total order first, ties broken lexicographically with d1
/// heaviest. Throws std::invalid_argument on dimension mismatch.
std::strong_ordering orderly_compare(const ExponentVector& v, const ExponentVector& w);

ExponentVector join(const ExponentVector& v, const ExponentVector& w);  // componentwise max
ExponentVector add(const ExponentVector& v, const ExponentVector& w);

struct OrderlyGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return orderly_compare(a, b) > 0;
    }
};

/// Finite set of leader multi-indices in a fixed number of derivations m.
/// Points are stored sorted (orderly ranking) and deduplicated. The set is
/// not automatically antichain-reduced; see antichain_reduce.
class LeaderSet {
public:
    explicit LeaderSet(int m, std::vector<ExponentVector> points = {});

    int dim() const { return m_; }
    const std::vector<ExponentVector>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    size_t size() const { return points_.size(); }

    bool operator==(const LeaderSet&) const = default;

    std::string to_text() const;  // "(2,0);(1,1)"; "" for the empty set

private:
    int m_;
    std::vector<ExponentVector> points_;
};

/// JSON form {"m":2,"points":[[2,0],[1,1]]}.
std::string leader_set_to_json(const LeaderSet& E);
LeaderSet leader_set_from_json(const std::string& text);

/// Keeps only the minimal points; every dominated region is unchanged.
LeaderSet antichain_reduce(const LeaderSet& E);

/// Brute-force count of { n in N^m : sum n_i <= s, no e in E with n >= e }.
/// This enumeration is the oracle the polynomial route is checked against.
Int count_direct(const LeaderSet& E, std::int64_t s);

struct OmegaPolynomial {
    NumericalPolynomial poly;
    std::int64_t threshold = 0;  // poly(s) equals the count for every s >= threshold
};

/// Inclusion-exclusion over joins of leader subsets, assembled as a
/// polynomial. Equals count_direct at every s >= threshold.
OmegaPolynomial omega_E(const LeaderSet& E);

/// The same inclusion-exclusion evaluated with truncated binomials
/// (C(k, m) = 0 for k < m). Equals count_direct at every s >= 0.
Int omega_exact(const LeaderSet& E, std::int64_t s);

/// Closed form C(t+m,m) - C(t-N+m,m) for a single leader of total order N.
NumericalPolynomial omega_single_leader(const ExponentVector& leader);

}  // namespace kolchin
