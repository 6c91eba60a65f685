#include <doctest.h>

#include "okb/errors.hpp"
#include "okb/semigroup.hpp"
#include "test_support.hpp"

using namespace okb;
using namespace okb::test;
using sgp::Semigroup;

namespace {

Semigroup gens1(std::vector<std::pair<long, long long>> gs) {
    std::vector<sgp::Generator> v;
    for (auto [k, x] : gs) v.push_back({k, {x}});
    return Semigroup::from_generators(1, v);
}

}  // namespace

TEST_CASE("analyze computes group, lattice and index") {
    SUBCASE("full lattice") {
        auto s = gens1({{1, 1}, {1, 0}, {1, -1}});
        auto a = sgp::analyze(s);
        CHECK(a.m == 1);
        CHECK(a.span_dim == 2);
        REQUIRE(a.level_lattice.size() == 1);
        CHECK(a.level_lattice[0] == IVec{1});
        CHECK(a.ind == 1);
        CHECK(a.strongly_nonneg);
    }
    SUBCASE("level gcd 2 is rejected") {
        auto s = gens1({{2, 0}});
        CHECK_THROWS_AS(sgp::analyze(s), assumption_error);
    }
    SUBCASE("index 3 from the value gap") {
        auto s = gens1({{1, 0}, {1, 3}});
        auto a = sgp::analyze(s);
        REQUIRE(a.level_lattice.size() == 1);
        CHECK(a.level_lattice[0] == IVec{3});
        CHECK(a.ind == 3);
    }
}

TEST_CASE("level materialization and hilbert function") {
    SUBCASE("single generator") {
        auto h = gens1({{1, 0}}).hilbert(10);
        for (long k = 1; k <= 10; ++k) CHECK(h[k] == 1);
    }
    SUBCASE("interval semigroup") {
        auto h = gens1({{1, 0}, {1, 1}}).hilbert(20);
        for (long k = 0; k <= 20; ++k) CHECK(h[k] == k + 1);
    }
    SUBCASE("the value 3k-1 is always missing") {
        auto s = gens1({{1, 0}, {1, 1}, {1, 3}});
        std::vector<std::vector<sgp::Point>> levels(51);
        s.scan(50, [&](long k, const std::vector<sgp::Point>& pts) { levels[k] = pts; });
        for (long k = 1; k <= 50; ++k) {
            CHECK(levels[k].size() == 3 * k);
            for (long long x = 0; x <= 3 * k; ++x) {
                bool present = std::binary_search(levels[k].begin(), levels[k].end(),
                                                  sgp::Point{x});
                CHECK(present == (x != 3 * k - 1));
            }
        }
    }
    SUBCASE("closure property on materialized levels") {
        auto s = Semigroup::from_generators(
            2, {{1, {0, 0}}, {1, {1, 0}}, {2, {1, 2}}});
        std::vector<std::vector<sgp::Point>> levels(9);
        s.scan(8, [&](long k, const std::vector<sgp::Point>& pts) { levels[k] = pts; });
        for (long k = 1; k <= 4; ++k)
            for (long l = 1; l + k <= 8; ++l)
                for (const auto& x : levels[k])
                    for (const auto& y : levels[l]) {
                        sgp::Point sum = {x[0] + y[0], x[1] + y[1]};
                        CHECK(std::binary_search(levels[k + l].begin(), levels[k + l].end(), sum));
                    }
    }
}

TEST_CASE("newton-okounkov bodies of small semigroups") {
    SUBCASE("the symmetric cone gives the segment [-1,1]") {
        auto b = sgp::newton_okounkov_body(gens1({{1, 1}, {1, 0}, {1, -1}}));
        CHECK(b.exact);
        REQUIRE(b.body.vertices().size() == 2);
        CHECK(b.body.vertices()[0] == Vec{Rat(-1)});
        CHECK(b.body.vertices()[1] == Vec{Rat(1)});
    }
    SUBCASE("one generator gives a point") {
        auto b = sgp::newton_okounkov_body(gens1({{1, 0}}));
        CHECK(b.body.affine_dim() == 0);
    }
    SUBCASE("gap semigroup gives [0,3]") {
        auto b = sgp::newton_okounkov_body(gens1({{1, 0}, {1, 1}, {1, 3}}));
        CHECK(b.body.vertices() == std::vector<Vec>{Vec{Rat(0)}, Vec{Rat(3)}});
    }
    SUBCASE("every enumerated point normalizes into the body") {
        auto s = Semigroup::from_generators(2, {{1, {0, 0}}, {1, {2, 1}}, {2, {1, 3}}});
        auto b = sgp::newton_okounkov_body(s);
        s.scan(10, [&](long k, const std::vector<sgp::Point>& pts) {
            for (const auto& p : pts) {
                Vec x = sgp::point_to_vec(p);
                for (auto& c : x) c /= k;
                CHECK(b.body.contains(x));
            }
        });
    }
}

TEST_CASE("regularization scan") {
    SUBCASE("saturated semigroup has no gaps") {
        auto r = sgp::regularization_scan(gens1({{1, 0}, {1, 1}}), Rat(9, 10), 50);
        for (const auto& lvl : r.levels) CHECK(lvl.gaps.empty());
        CHECK(r.empirical_n == 0);
    }
    SUBCASE("gap semigroup misses exactly 3k-1, leaving the shrunk cone at k=7") {
        auto s = gens1({{1, 0}, {1, 1}, {1, 3}});
        auto r = sgp::regularization_scan(s, Rat(9, 10), 50);
        REQUIRE(r.levels.size() == 50);
        for (const auto& lvl : r.levels) {
            REQUIRE(lvl.gaps.size() == 1);
            CHECK(lvl.gaps[0] == sgp::Point{3 * lvl.k - 1});
        }
        // shrunk body [3/20, 57/20]: 3k-1 <= 57k/20 iff k <= 20/3
        CHECK(r.empirical_n == 6);
        CHECK(r.empirical_n <= 20);
    }
    SUBCASE("parity-constrained semigroup equals its regularization") {
        auto r = sgp::regularization_scan(gens1({{1, 1}, {1, -1}}), Rat(9, 10), 30);
        for (const auto& lvl : r.levels) CHECK(lvl.gaps.empty());
    }
    SUBCASE("containment and count comparison against the regularization") {
        auto s = gens1({{1, 0}, {1, 1}, {1, 3}});
        auto r = sgp::regularization_scan(s, Rat(9, 10), 100);
        auto h = s.hilbert(100);
        // H_S(k) <= H_Reg(k), with ratio at least 0.97 at k = 100
        long k = 100;
        long long reg_count = h[k] + static_cast<long long>(r.levels[k - 1].gaps.size());
        CHECK(h[k] <= reg_count);
        CHECK(Rat(h[k]) / Rat(reg_count) >= Rat(97, 100));
    }
}

TEST_CASE("growth checks") {
    SUBCASE("interval semigroup, constant function") {
        auto g = sgp::growth_check(gens1({{1, 0}, {1, 1}}),
                                   geom::LinearFormProduct::constant(1, 1), 200);
        CHECK(g.exact_limit == 1);
        Rat diff = g.empirical_ratio - g.exact_limit;
        if (diff < 0) diff = -diff;
        CHECK(diff < Rat(1, 100));
    }
    SUBCASE("index enters the limit") {
        auto g = sgp::growth_check(gens1({{1, 0}, {1, 3}}),
                                   geom::LinearFormProduct::constant(1, 1), 200);
        CHECK(g.exact_limit == 1);  // Vol[0,3]/ind = 3/3
        CHECK(g.count_at_k == 201);
    }
    SUBCASE("linear weight function") {
        geom::LinearFormProduct f({{Vec{Rat(1)}, Rat(0)}}, 1);
        auto g = sgp::growth_check(gens1({{1, 0}, {1, 1}}), f, 100);
        CHECK(g.exact_limit == Rat(1, 2));
        // sum_{j<=k} j / k^2 = (k+1)/(2k)
        CHECK(g.empirical_ratio == Rat(101, 200));
    }
}

TEST_CASE("levelwise sums") {
    auto a = gens1({{1, 0}, {1, 1}});
    auto neutral = gens1({{1, 0}});
    SUBCASE("neutral summand") {
        auto s = Semigroup::levelwise_sum(a, neutral);
        for (long k = 1; k <= 10; ++k) CHECK(s.level(k) == a.level(k));
    }
    SUBCASE("bodies add in the Minkowski sense") {
        auto b = gens1({{1, 0}, {1, 2}});
        auto sum = Semigroup::levelwise_sum(a, b);
        // exact body identity via the summands' exact bodies
        auto ba = sgp::newton_okounkov_body(a).body;
        auto bb = sgp::newton_okounkov_body(b).body;
        auto expected = minkowski_sum(ba, bb);
        CHECK(expected.vertices() == std::vector<Vec>{Vec{Rat(0)}, Vec{Rat(3)}});
        // every normalized point of the sum lies in the Minkowski sum, and the
        // extremes are attained at materialized levels
        sum.scan(12, [&](long k, const std::vector<sgp::Point>& pts) {
            for (const auto& p : pts) {
                Vec x = sgp::point_to_vec(p);
                for (auto& c : x) c /= k;
                CHECK(expected.contains(x));
            }
        });
        CHECK(sum.level(1) == std::vector<sgp::Point>{{0}, {1}, {2}, {3}});
    }
    SUBCASE("level 2 of the sum") {
        auto b = gens1({{1, 0}, {1, 2}});
        auto sum = Semigroup::levelwise_sum(a, b);
        std::vector<sgp::Point> expect;
        for (long long x = 0; x <= 6; ++x) expect.push_back({x});
        CHECK(sum.level(2) == expect);
    }
}

TEST_CASE("oracle semigroups validate additivity") {
    std::map<long, std::vector<sgp::Point>> good;
    good[1] = {{0}, {1}};
    good[2] = {{0}, {1}, {2}};
    auto s = Semigroup::from_levels(1, 2, good);
    CHECK(s.cutoff() == 2);
    CHECK(s.level(2).size() == 3);

    std::map<long, std::vector<sgp::Point>> bad;
    bad[1] = {{0}, {1}};
    bad[2] = {{0}, {2}};  // misses 1 = 0 + 1
    CHECK_THROWS_AS(Semigroup::from_levels(1, 2, bad), input_error);
}

TEST_CASE("cap errors on deep scans") {
    auto s = gens1({{1, 0}});
    CHECK_THROWS_AS(s.scan(caps().max_level + 1, [](long, const std::vector<sgp::Point>&) {}),
                    cap_error);
}
