#pragma once

#include "kolchin/lattice.hpp"
#include "kolchin/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace kolchin {

/// Linear differential operator sum_theta c_theta * d^theta with
/// rational-function coefficients in x1..xm and m commuting derivations
/// d1..dm realized on coefficients as partial derivatives. Coefficients sit
/// to the left of the derivative monomials; composition normalizes back to
/// that form through the Leibniz rule.
class DiffOperator {
public:
    using TermMap = std::map<ExponentVector, RatFunc, OrderlyGreater>;

    explicit DiffOperator(int m = 0);

    static DiffOperator coefficient(int m, RatFunc c);         // multiplication operator
    static DiffOperator derivation(int m, int i);              // d_i, 1-based
    static DiffOperator monomial(int m, ExponentVector theta, RatFunc c);
    static DiffOperator identity(int m);                       // multiplication by 1

    int derivations() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;  // max total order of a stored monomial, -1 for zero

    DiffOperator operator+(const DiffOperator& rhs) const;
    DiffOperator operator-(const DiffOperator& rhs) const;
    DiffOperator operator-() const;

    /// Composition: (A * B)(f) = A(B(f)).
    DiffOperator operator*(const DiffOperator& rhs) const;
    DiffOperator pow(unsigned long k) const;

    RatFunc apply(const RatFunc& f) const;

    /// Highest derivative monomial under the orderly ranking. Throws
    /// std::domain_error on the zero operator.
    ExponentVector leader() const;

    bool operator==(const DiffOperator&) const = default;

    std::string to_string() const;  // descending orderly ranking, reparseable

private:
    int m_;
    TermMap terms_;

    void add_term(const ExponentVector& theta, const RatFunc& c);
};

/// d_i applied to a coefficient (1-based index into the derivation set).
RatFunc derive_coeff(int i, const RatFunc& c);

enum class CompositionOrder { LeftToRight, RightToLeft };

/// Folds the factors into a single operator. LeftToRight composes the list
/// as written (first factor acts last); RightToLeft reverses it.
DiffOperator compose_sequence(const std::vector<DiffOperator>& factors,
                              CompositionOrder order);

struct FactorizationCheck {
    DiffOperator product_ltr;
    DiffOperator product_rtl;
    DiffOperator residual_ltr;  // target - product
    DiffOperator residual_rtl;
    bool match_ltr = false;
    bool match_rtl = false;

    bool any_match() const { return match_ltr || match_rtl; }
};

/// Composes the factors in both orders and reports which one, if any,
/// reproduces the target. Residuals are returned either way so a failed
/// identity can be examined rather than guessed at.
FactorizationCheck verify_factorization(const DiffOperator& target,
                                        const std::vector<DiffOperator>& factors);

}  // namespace kolchin
