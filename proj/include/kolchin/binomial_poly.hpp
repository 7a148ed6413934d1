#pragma once

#include "kolchin/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kolchin {

/// Integer-valued polynomial stored in the binomial basis:
///
///   p(t) = sum_i coeffs[i] * C(t + i, i)
///
/// Trailing zero coefficients are stripped, so the top stored coefficient of
/// a nonzero polynomial is nonzero and the zero polynomial stores an empty
/// sequence. Evaluation at any integer t >= 0 is an exact integer; there is
/// no floating-point path anywhere.
class NumericalPolynomial {
public:
    NumericalPolynomial() = default;

    static NumericalPolynomial from_binomial_coeffs(std::vector<Int> coeffs);
    static NumericalPolynomial constant(Int value);

    /// C(t + m, m): the number of points of N^m with coordinate sum <= t.
    static NumericalPolynomial simplex(int m);

    /// C(t - shift + m, m) rewritten into the binomial basis.
    static NumericalPolynomial shifted_simplex(int m, std::int64_t shift);

    /// Inverse of standard_coeffs(). Throws std::invalid_argument when the
    /// given polynomial has no integer binomial-basis expansion.
    static NumericalPolynomial from_standard(const std::vector<Rat>& std_coeffs);

    const std::vector<Int>& binomial_coeffs() const { return coeffs_; }

    /// Coefficients in the monomial basis 1, t, t^2, ... as exact rationals.
    std::vector<Rat> standard_coeffs() const;

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Throws std::domain_error on the zero polynomial.
    const Int& leading_coeff() const;

    /// Requires t >= 0.
    Int evaluate(const Int& t) const;
    Int evaluate(std::int64_t t) const { return evaluate(Int(static_cast<long>(t))); }

    NumericalPolynomial operator+(const NumericalPolynomial& rhs) const;
    NumericalPolynomial operator-(const NumericalPolynomial& rhs) const;
    NumericalPolynomial operator-() const;
    bool operator==(const NumericalPolynomial&) const = default;

    /// "C(t+2,2) + 2*C(t+1,1) - 1"; the zero polynomial prints "0".
    std::string to_string() const;

private:
    std::vector<Int> coeffs_;

    void normalize();
};

enum class EventualOrder { Less, Equal, Greater };

/// Comparison by eventual domination. For order != Equal the sign of
/// p(t) - q(t) is constant (and nonzero) for every t >= threshold.
struct EventualComparison {
    EventualOrder order = EventualOrder::Equal;
    Int threshold = 0;
};

EventualComparison compare_eventual(const NumericalPolynomial& p,
                                    const NumericalPolynomial& q);

/// Differential type tau and typical differential dimension alpha.
///
/// tau = -1, alpha = 0 is the bottom value reserved for the zero polynomial
/// (a singleton: the trivial variety or trivial quotient). Nonzero constants
/// have tau = 0, so the bottom value sits strictly below every genuine type.
struct InvariantPair {
    int tau = -1;
    Int alpha = 0;

    bool is_trivial() const { return tau < 0; }
    bool operator==(const InvariantPair&) const = default;
};

/// True when the pair satisfies tau = -1 => alpha = 0 and
/// tau >= 0 => alpha >= 1.
bool valid_invariants(const InvariantPair& p);

/// Reads (tau, alpha) off the binomial-basis form: tau is the degree, alpha
/// the top coefficient. Throws std::domain_error when the top coefficient is
/// negative; no counting function looks like that.
InvariantPair invariants_of(const NumericalPolynomial& p);

}  // namespace kolchin
