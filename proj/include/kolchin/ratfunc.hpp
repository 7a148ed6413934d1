#pragma once

#include "kolchin/multipoly.hpp"

#include <string>

namespace kolchin {

/// Rational function num/den over x1..xn in canonical form: gcd(num, den)
/// is 1, den is monic under graded-lex, and zero is 0/1. Equality is
/// structural after this normalization.
class RatFunc {
public:
    explicit RatFunc(int nvars = 0);
    RatFunc(MultiPoly numerator);  // NOLINT: polynomials convert freely
    RatFunc(MultiPoly numerator, MultiPoly denominator);

    static RatFunc constant(int nvars, const Rat& c);
    static RatFunc variable(int nvars, int index);

    int nvars() const { return num_.nvars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const;
    Rat constant_value() const;

    RatFunc operator+(const RatFunc& rhs) const;
    RatFunc operator-(const RatFunc& rhs) const;
    RatFunc operator*(const RatFunc& rhs) const;
    RatFunc operator/(const RatFunc& rhs) const;  // throws std::domain_error on zero
    RatFunc operator-() const;
    bool operator==(const RatFunc&) const = default;

    /// Partial derivative with respect to x_var (quotient rule).
    RatFunc derivative(int var) const;

    std::string to_string() const;  // "(x1 + 1)/(x2)" or the bare numerator

private:
    MultiPoly num_;
    MultiPoly den_;

    void normalize();
};

}  // namespace kolchin
