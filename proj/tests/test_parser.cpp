#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kolchin/parser.hpp"

#include <random>

using namespace kolchin;

namespace {

DiffOperator random_operator(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> cv(-5, 5);
    std::uniform_int_distribution<long> cd(1, 4);
    std::uniform_int_distribution<int> shape(0, 2);
    DiffOperator op(2);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        MultiPoly p(2);
        int style = shape(rng);
        if (style == 0) {
            p = MultiPoly::constant(2, make_rat(cv(rng), cd(rng)));
        } else if (style == 1) {
            p = MultiPoly::monomial(2, {exp(rng), exp(rng)}, Rat(cv(rng)));
        } else {
            p = MultiPoly::monomial(2, {exp(rng), exp(rng)}, Rat(cv(rng))) +
                MultiPoly::monomial(2, {exp(rng), exp(rng)}, Rat(cv(rng)));
        }
        op = op + DiffOperator::monomial(2, ExponentVector{exp(rng), exp(rng)}, RatFunc(p));
    }
    return op;
}

}  // namespace

TEST_CASE("simple operator expressions") {
    DiffOperator op = parse_operator("d1^2 - d2", 2);
    DiffOperator expected = DiffOperator::derivation(2, 1).pow(2) - DiffOperator::derivation(2, 2);
    CHECK(op == expected);
    CHECK(op.terms().size() == 2);

    CHECK(parse_operator("2*d1", 2) ==
          DiffOperator::monomial(2, ExponentVector{1, 0}, RatFunc::constant(2, Rat(2))));
    CHECK(parse_operator("- d1 + d1", 2).is_zero());
    CHECK(parse_operator("1/2*x1", 2) ==
          DiffOperator::coefficient(2, RatFunc::constant(2, make_rat(1, 2)) *
                                           RatFunc::variable(2, 1)));
    CHECK(parse_operator("(d1 + d2)^2", 2) ==
          (DiffOperator::derivation(2, 1) + DiffOperator::derivation(2, 2)).pow(2));
}

TEST_CASE("operator product is composition") {
    // d1 * x1 = x1 d1 + 1, while x1 * d1 stays put
    CHECK(parse_operator("d1*x1 - x1*d1", 2) == DiffOperator::identity(2));
}

TEST_CASE("definitions") {
    Definitions defs = parse_definitions(2, {"c2=x1", "twice=2*c2"});
    CHECK(defs.at("c2") == RatFunc::variable(2, 1));
    CHECK(defs.at("twice") == RatFunc::constant(2, Rat(2)) * RatFunc::variable(2, 1));

    // the displayed order-3 operator, with c2 bound to x1
    DiffOperator op = parse_operator(
        "c2*d1^3 - c2*d1^2*d2 - 2*c2*d1*d2 + c2^2*d2^2 + 2*d2", 2, defs);
    RatFunc x1 = RatFunc::variable(2, 1);
    RatFunc two = RatFunc::constant(2, Rat(2));
    DiffOperator expected =
        DiffOperator::monomial(2, ExponentVector{3, 0}, x1) -
        DiffOperator::monomial(2, ExponentVector{2, 1}, x1) -
        DiffOperator::monomial(2, ExponentVector{1, 1}, two * x1) +
        DiffOperator::monomial(2, ExponentVector{0, 2}, x1 * x1) +
        DiffOperator::monomial(2, ExponentVector{0, 1}, two);
    CHECK(op == expected);
    CHECK(op.leader() == ExponentVector{3, 0});

    CHECK_THROWS_AS(parse_definitions(2, {"x1=x2"}), ParseError);
    CHECK_THROWS_AS(parse_definitions(2, {"a=x1", "a=x2"}), ParseError);
    CHECK_THROWS_AS(parse_definitions(2, {"a=d1"}), ParseError);  // not a coefficient
    CHECK_THROWS_AS(parse_definitions(2, {"nonsense"}), ParseError);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_operator("d0", 2), ParseError);        // no derivation zero
    CHECK_THROWS_AS(parse_operator("d3", 2), ParseError);        // index above m
    CHECK_THROWS_AS(parse_operator("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_operator("c2*d1", 2), ParseError);     // undefined alias
    CHECK_THROWS_AS(parse_operator("d1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_operator("(d1", 2), ParseError);
    CHECK_THROWS_AS(parse_operator("1/0", 2), ParseError);
    CHECK_THROWS_AS(parse_operator("x1/x2", 2), ParseError);     // '/' is for integer rationals
    CHECK_THROWS_AS(parse_operator("d1^x1", 2), ParseError);
    CHECK_THROWS_AS(parse_operator("", 2), ParseError);
    try {
        parse_operator("d1 + $", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("printed operators reparse to the same operator") {
    std::mt19937 rng(60221023);
    for (int iter = 0; iter < 500; ++iter) {
        DiffOperator op = random_operator(rng);
        std::string text = op.to_string();
        CAPTURE(text);
        DiffOperator back = parse_operator(text, 2);
        CHECK(back == op);
    }
}

TEST_CASE("coefficient parsing") {
    CHECK(parse_coefficient("x1^2 + x2", 2) ==
          RatFunc::variable(2, 1) * RatFunc::variable(2, 1) + RatFunc::variable(2, 2));
    CHECK(parse_coefficient("0", 2).is_zero());
    CHECK_THROWS_AS(parse_coefficient("d1", 2), ParseError);
}

TEST_CASE("leader set parsing") {
    LeaderSet e = parse_leader_set(2, "(2,0);(1,1)");
    CHECK(e == LeaderSet(2, {ExponentVector{2, 0}, ExponentVector{1, 1}}));
    CHECK(parse_leader_set(3, " ( 1 , 0 , 2 ) ") ==
          LeaderSet(3, {ExponentVector{1, 0, 2}}));
    CHECK(parse_leader_set(2, "").empty());
    CHECK_THROWS_AS(parse_leader_set(2, "(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_leader_set(2, "(1,-2)"), ParseError);
    CHECK_THROWS_AS(parse_leader_set(2, "(1,2);"), ParseError);
    CHECK_THROWS_AS(parse_leader_set(2, "1,2"), ParseError);
}
