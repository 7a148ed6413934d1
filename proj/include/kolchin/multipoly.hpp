#pragma once

#include "kolchin/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace kolchin {

// Descending graded-lex on exponent rows, x1 heaviest on ties.
struct MonomialGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial over the rationals in x1..xn. Terms are
/// kept in descending graded-lex order with nonzero coefficients only, so
/// equality is structural.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rat, MonomialGreater>;

    explicit MultiPoly(int nvars = 0);
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int index);  // 1-based
    static MultiPoly monomial(int nvars, std::vector<int> exps, const Rat& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // coefficient of the unit monomial
    int total_degree() const;    // -1 for zero
    int degree_in(int var) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rat& c) const;

    /// Partial derivative with respect to x_var (1-based).
    MultiPoly derivative(int var) const;

    bool operator==(const MultiPoly&) const = default;

    std::string to_string() const;  // "x1^2*x2 - 1/2"; zero prints "0"

    /// Monic gcd (leading graded-lex coefficient 1); gcd(0,0) = 0.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    /// Exact quotient a / b; throws std::domain_error when b does not
    /// divide a.
    static MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b);

private:
    int nvars_;
    TermMap terms_;

    void add_term(const std::vector<int>& exps, const Rat& c);
};

}  // namespace kolchin
