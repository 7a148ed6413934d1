#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kolchin/lattice.hpp"

#include <functional>
#include <random>

using namespace kolchin;

namespace {

NumericalPolynomial poly(std::vector<long> cs) {
    std::vector<Int> coeffs;
    for (long c : cs) coeffs.emplace_back(c);
    return NumericalPolynomial::from_binomial_coeffs(std::move(coeffs));
}

LeaderSet random_leader_set(std::mt19937& rng, int max_entries, int max_size) {
    std::uniform_int_distribution<int> dim(1, 3);
    int m = dim(rng);
    std::uniform_int_distribution<int> count(0, max_size);
    std::uniform_int_distribution<int> entry(0, max_entries);
    std::vector<ExponentVector> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(m));
        for (auto& v : e) v = entry(rng);
        pts.emplace_back(std::move(e));
    }
    return LeaderSet(m, std::move(pts));
}

}  // namespace

TEST_CASE("exponent vector basics") {
    CHECK(ExponentVector{0, 0}.ord() == 0);
    CHECK(ExponentVector{2, 1}.ord() == 3);
    CHECK(ExponentVector{1, 0, 4}.ord() == 5);
    CHECK_THROWS_AS(ExponentVector({-1, 0}), std::invalid_argument);

    CHECK(dominates({2, 1}, {1, 1}));
    CHECK_FALSE(dominates({2, 0}, {0, 1}));
    CHECK(dominates({2, 1}, {2, 1}));
    CHECK_THROWS_AS(dominates({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("orderly ranking is graded then lexicographic") {
    CHECK(orderly_compare({2, 0}, {1, 0}) > 0);
    CHECK(orderly_compare({2, 1}, {1, 2}) > 0);  // equal order 3, d1 breaks the tie
    CHECK(orderly_compare({1, 1}, {1, 1}) == 0);
    CHECK(orderly_compare({0, 2}, {1, 1}) < 0);
    CHECK_THROWS_AS(orderly_compare({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("antichain reduction") {
    LeaderSet a(2, {ExponentVector{1, 0}, ExponentVector{2, 0}});
    CHECK(antichain_reduce(a) == LeaderSet(2, {ExponentVector{1, 0}}));

    LeaderSet b(2, {ExponentVector{1, 1}, ExponentVector{2, 0}});
    CHECK(antichain_reduce(b) == b);

    CHECK(antichain_reduce(LeaderSet(2)) == LeaderSet(2));
}

TEST_CASE("count_direct examples") {
    CHECK(count_direct(LeaderSet(2, {ExponentVector{2, 0}}), 2) == 5);
    CHECK(count_direct(LeaderSet(2), 3) == 10);  // C(5, 2)
    for (long s = 0; s <= 4; ++s) {
        CHECK(count_direct(LeaderSet(2, {ExponentVector{0, 0}}), s) == 0);
    }
}

TEST_CASE("omega_E on the worked examples") {
    OmegaPolynomial free2 = omega_E(LeaderSet(2));
    CHECK(free2.poly == NumericalPolynomial::simplex(2));
    CHECK(free2.threshold == 0);

    OmegaPolynomial w = omega_E(LeaderSet(2, {ExponentVector{2, 0}}));
    CHECK(w.poly == poly({-1, 2}));  // 2t + 1
    CHECK(w.threshold == 2);
    CHECK(w.poly == NumericalPolynomial::simplex(2) - NumericalPolynomial::shifted_simplex(2, 2));
    for (long s = 0; s <= 7; ++s) {
        CHECK(omega_exact(LeaderSet(2, {ExponentVector{2, 0}}), s) ==
              count_direct(LeaderSet(2, {ExponentVector{2, 0}}), s));
    }

    LeaderSet diag(2, {ExponentVector{1, 1}});
    OmegaPolynomial wd = omega_E(diag);
    CHECK(wd.poly == poly({-1, 2}));
    CHECK(count_direct(diag, 0) == 1);
    CHECK(count_direct(diag, 1) == 3);
    CHECK(count_direct(diag, 2) == 5);
    CHECK(count_direct(diag, 3) == 7);

    OmegaPolynomial w3 = omega_E(LeaderSet(3, {ExponentVector{1, 0, 0}}));
    CHECK(w3.poly == NumericalPolynomial::simplex(2));
}

TEST_CASE("omega_single_leader closed form") {
    CHECK(omega_single_leader({2, 0}) == poly({-1, 2}));
    CHECK(omega_single_leader({1, 1, 1}) ==
          NumericalPolynomial::simplex(3) - NumericalPolynomial::shifted_simplex(3, 3));
    CHECK(omega_single_leader({0, 0}).is_zero());
}

TEST_CASE("single-leader invariants are (m-1, ord)") {
    for (int m = 1; m <= 3; ++m) {
        // enumerate all leaders with entries summing to <= 8
        std::vector<std::vector<int>> all;
        std::function<void(std::vector<int>, int, int)> gen = [&](std::vector<int> cur, int pos,
                                                                  int left) {
            if (pos == m) {
                all.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                gen(cur, pos + 1, left - v);
            }
        };
        gen(std::vector<int>(static_cast<size_t>(m), 0), 0, 8);
        for (const auto& e : all) {
            ExponentVector v(e);
            if (v.is_zero()) continue;
            NumericalPolynomial closed = omega_single_leader(v);
            CHECK(closed == omega_E(LeaderSet(m, {v})).poly);
            InvariantPair inv = invariants_of(closed);
            CHECK(inv.tau == m - 1);
            CHECK(inv.alpha == v.ord());
        }
    }
}

TEST_CASE("oracle equivalence on random leader sets") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 120; ++iter) {
        LeaderSet e = random_leader_set(rng, 3, 4);
        OmegaPolynomial w = omega_E(e);
        for (std::int64_t s = 0; s <= w.threshold + 5; ++s) {
            Int oracle = count_direct(e, s);
            CHECK(omega_exact(e, s) == oracle);
            if (s >= w.threshold) CHECK(w.poly.evaluate(s) == oracle);
        }
        CHECK(omega_E(antichain_reduce(e)).poly == w.poly);
    }
}

TEST_CASE("adding leaders can only shrink the count") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 80; ++iter) {
        LeaderSet e = random_leader_set(rng, 3, 3);
        std::uniform_int_distribution<int> entry(0, 3);
        std::vector<int> extra(static_cast<size_t>(e.dim()));
        for (auto& v : extra) v = entry(rng);
        std::vector<ExponentVector> pts = e.points();
        pts.emplace_back(std::move(extra));
        LeaderSet bigger(e.dim(), std::move(pts));
        EventualOrder order = compare_eventual(omega_E(bigger).poly, omega_E(e).poly).order;
        CHECK(order != EventualOrder::Greater);
    }
}

TEST_CASE("leader set text form") {
    LeaderSet e(2, {ExponentVector{2, 0}, ExponentVector{1, 1}});
    CHECK(e.to_text() == "(1,1);(2,0)");
    CHECK(LeaderSet(2).to_text() == "");
}

TEST_CASE("leader set JSON form") {
    LeaderSet e(2, {ExponentVector{2, 0}, ExponentVector{1, 1}});
    CHECK(leader_set_to_json(e) == "{\"m\":2,\"points\":[[1,1],[2,0]]}");
    CHECK(leader_set_from_json("{\"m\":2,\"points\":[[2,0],[1,1]]}") == e);
    CHECK(leader_set_from_json(leader_set_to_json(LeaderSet(3))) == LeaderSet(3));
    CHECK_THROWS(leader_set_from_json("{\"m\":2}"));
}
