#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kolchin/diff_operator.hpp"

#include <random>

using namespace kolchin;

namespace {

RatFunc x1(int m = 2) { return RatFunc::variable(m, 1); }
RatFunc x2(int m = 2) { return RatFunc::variable(m, 2); }
RatFunc num(long v, int m = 2) { return RatFunc::constant(m, Rat(v)); }

DiffOperator d(int i, int m = 2) { return DiffOperator::derivation(m, i); }
DiffOperator coeff(const RatFunc& c) { return DiffOperator::coefficient(c.nvars(), c); }

DiffOperator random_operator(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> order(0, 2);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> cv(-3, 3);
    DiffOperator op(2);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int e1 = exp(rng);
        int e2 = std::min(exp(rng), 2 - e1);
        MultiPoly p(2);
        std::uniform_int_distribution<int> pe(0, 2);
        for (int term = 0; term <= order(rng); ++term) {
            p = p + MultiPoly::monomial(2, {pe(rng), pe(rng)}, Rat(cv(rng)));
        }
        if (p.is_zero()) p = MultiPoly::constant(2, Rat(1));
        op = op + DiffOperator::monomial(2, ExponentVector{e1, e2}, RatFunc(p));
    }
    return op;
}

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> pe(0, 2);
    std::uniform_int_distribution<long> cv(-3, 3);
    MultiPoly p(2);
    for (int term = 0; term < 3; ++term) {
        p = p + MultiPoly::monomial(2, {pe(rng), pe(rng)}, Rat(cv(rng)));
    }
    return RatFunc(p);
}

}  // namespace

TEST_CASE("derive_coeff") {
    CHECK(derive_coeff(1, x1()) == num(1));
    CHECK(derive_coeff(2, x1()).is_zero());
    CHECK(derive_coeff(1, x1() * x1() * x2()) == num(2) * x1() * x2());
    CHECK_THROWS_AS(derive_coeff(3, x1()), std::out_of_range);
    CHECK_THROWS_AS(derive_coeff(0, x1()), std::out_of_range);
}

TEST_CASE("composition expands by the Leibniz rule") {
    // d1 after multiplication-by-x1: x1*d1 + 1
    DiffOperator left = d(1) * coeff(x1());
    CHECK(left == DiffOperator::monomial(2, ExponentVector{1, 0}, x1()) +
                      DiffOperator::identity(2));

    CHECK(d(1) * d(2) == d(2) * d(1));

    DiffOperator x1d1 = DiffOperator::monomial(2, ExponentVector{1, 0}, x1());
    DiffOperator sq = x1d1 * x1d1;  // x1^2 d1^2 + x1 d1
    CHECK(sq == DiffOperator::monomial(2, ExponentVector{2, 0}, x1() * x1()) +
                    DiffOperator::monomial(2, ExponentVector{1, 0}, x1()));
}

TEST_CASE("application") {
    DiffOperator op = d(1) * d(1) - d(2);
    CHECK(op.apply(x1() * x1() + x2()) == num(1));
    CHECK(DiffOperator::identity(2).apply(x1()) == x1());
    CHECK(d(1).apply(x2() * x2() * x2()).is_zero());
}

TEST_CASE("leader under the orderly ranking") {
    CHECK((d(1) * d(1) - d(2)).leader() == ExponentVector{2, 0});

    // x1 d1^3 - x1 d1^2 d2 - 2 x1 d1 d2 + x1^2 d2^2 + 2 d2
    DiffOperator big = DiffOperator::monomial(2, ExponentVector{3, 0}, x1()) -
                       DiffOperator::monomial(2, ExponentVector{2, 1}, x1()) -
                       DiffOperator::monomial(2, ExponentVector{1, 1}, num(2) * x1()) +
                       DiffOperator::monomial(2, ExponentVector{0, 2}, x1() * x1()) +
                       DiffOperator::monomial(2, ExponentVector{0, 1}, num(2));
    CHECK(big.leader() == ExponentVector{3, 0});
    CHECK(big.order() == 3);

    CHECK(coeff(num(5)).leader() == ExponentVector{0, 0});
    CHECK_THROWS_AS(DiffOperator(2).leader(), std::domain_error);
}

TEST_CASE("factorization verification") {
    DiffOperator target = d(1) * d(1) - d(2) * d(2);
    FactorizationCheck both = verify_factorization(target, {d(1) + d(2), d(1) - d(2)});
    CHECK(both.match_ltr);
    CHECK(both.match_rtl);

    DiffOperator x1d1 = DiffOperator::monomial(2, ExponentVector{1, 0}, x1());
    FactorizationCheck one_sided =
        verify_factorization(x1d1 * d(1), {x1d1, d(1)});
    CHECK(one_sided.match_ltr);
    CHECK_FALSE(one_sided.match_rtl);  // d1 x1 d1 = x1 d1^2 + d1
    CHECK(one_sided.residual_rtl == -d(1));

    FactorizationCheck neither = verify_factorization(d(1), {d(2), d(2)});
    CHECK_FALSE(neither.any_match());
}

TEST_CASE("associativity of composition") {
    std::mt19937 rng(1618);
    for (int iter = 0; iter < 100; ++iter) {
        DiffOperator a = random_operator(rng);
        DiffOperator b = random_operator(rng);
        DiffOperator c = random_operator(rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("composition is compatible with application") {
    std::mt19937 rng(3141);
    for (int iter = 0; iter < 100; ++iter) {
        DiffOperator a = random_operator(rng);
        DiffOperator b = random_operator(rng);
        RatFunc f = random_ratfunc(rng);
        CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("composition distributes over addition") {
    std::mt19937 rng(112358);
    for (int iter = 0; iter < 60; ++iter) {
        DiffOperator a = random_operator(rng);
        DiffOperator b = random_operator(rng);
        DiffOperator c = random_operator(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("leaders multiply under composition") {
    std::mt19937 rng(999);
    for (int iter = 0; iter < 100; ++iter) {
        DiffOperator a = random_operator(rng);
        DiffOperator b = random_operator(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).leader() == add(a.leader(), b.leader()));
    }
}

TEST_CASE("commutation with a coefficient is the derivative") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        RatFunc c = random_ratfunc(rng);
        for (int i = 1; i <= 2; ++i) {
            DiffOperator lhs = d(i) * coeff(c) - coeff(c) * d(i);
            CHECK(lhs == coeff(derive_coeff(i, c)));
        }
    }
}

TEST_CASE("printing canonical forms") {
    DiffOperator op = DiffOperator::monomial(2, ExponentVector{2, 0}, x1()) -
                      d(2) + coeff(num(3));
    CHECK(op.to_string() == "x1*d1^2 - d2 + 3");
    CHECK(DiffOperator(2).to_string() == "0");
    CHECK((d(1) * d(1) - d(2)).to_string() == "d1^2 - d2");
    DiffOperator sum_coeff = DiffOperator::monomial(2, ExponentVector{1, 0}, x1() + num(1));
    CHECK(sum_coeff.to_string() == "(x1 + 1)*d1");
}
