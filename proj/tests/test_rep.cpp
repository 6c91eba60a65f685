#include <doctest.h>

#include <random>

#include "okb/errors.hpp"
#include "okb/rep.hpp"
#include "test_support.hpp"

using namespace okb;
using namespace okb::test;
using rep::RootData;
using rep::Weight;

TEST_CASE("weyl dimension formula") {
    RootData gl3 = RootData::gl(3);
    CHECK(rep::weyl_dim(gl3, {2, 1, 0}) == 8);
    CHECK(rep::weyl_dim(gl3, {0, 0, 0}) == 1);
    RootData gl2 = RootData::gl(2);
    for (long k = 0; k <= 6; ++k) CHECK(rep::weyl_dim(gl2, {k, 0}) == k + 1);
    CHECK_THROWS_AS(rep::weyl_dim(gl3, {0, 1, 0}), input_error);
    SUBCASE("products multiply") {
        RootData prod = RootData::parse("GL2xGL3");
        CHECK(rep::weyl_dim(prod, {1, 0, 2, 1, 0}) == 2 * 8);
    }
}

TEST_CASE("gc polytopes") {
    SUBCASE("GL2 fundamental weight is a segment") {
        auto p = rep::gc_polytope(RootData::gl(2), {1, 0});
        CHECK(p.vertices() == std::vector<Vec>{Vec{Rat(0)}, Vec{Rat(1)}});
    }
    SUBCASE("zero weight collapses to a point") {
        auto p = rep::gc_polytope(RootData::gl(3), {0, 0, 0});
        CHECK(p.affine_dim() == 0);
    }
    SUBCASE("GL3 (2,1,0): dimension 3, normalized volume 1, 8 lattice points") {
        auto p = rep::gc_polytope(RootData::gl(3), {2, 1, 0});
        CHECK(p.affine_dim() == 3);
        CHECK(normalized_volume(p, geom::Lattice::standard(3)) == 1);
        auto pts = lattice_points(p, geom::Lattice::standard(3));
        CHECK(pts.size() == 8);
    }
}

TEST_CASE("gc pattern enumeration and characters") {
    RootData gl3 = RootData::gl(3);
    SUBCASE("count and the (1,1,1) multiplicity for (2,1,0)") {
        auto en = rep::gc_patterns(gl3, {2, 1, 0});
        CHECK(en.patterns.size() == 8);
        CHECK(en.table.at({1, 1, 1}) == 2);
    }
    SUBCASE("standard representation weights") {
        auto en = rep::gc_patterns(gl3, {1, 0, 0});
        CHECK(en.patterns.size() == 3);
        CHECK(en.table.at({1, 0, 0}) == 1);
        CHECK(en.table.at({0, 1, 0}) == 1);
        CHECK(en.table.at({0, 0, 1}) == 1);
    }
    SUBCASE("trivial weight") {
        auto en = rep::gc_patterns(gl3, {0, 0, 0});
        REQUIRE(en.patterns.size() == 1);
        CHECK(en.table.at({0, 0, 0}) == 1);
    }
    SUBCASE("pattern count equals the Weyl dimension, GL3 spread <= 2") {
        for (long a = 0; a <= 2; ++a)
            for (long b = 0; b <= a; ++b) {
                Weight w = {a, b, 0};
                CHECK(Int(rep::gc_patterns(gl3, w).patterns.size()) == rep::weyl_dim(gl3, w));
            }
    }
    SUBCASE("characters are symmetric under coordinate permutations") {
        auto table = rep::character(gl3, {3, 1, 0});
        for (const auto& [w, m] : table) {
            Weight p = {w[1], w[2], w[0]};
            CHECK(table.at(p) == m);
        }
        Int total = 0;
        for (const auto& [w, m] : table) total += m;
        CHECK(total == rep::weyl_dim(gl3, {3, 1, 0}));
    }
}

TEST_CASE("duals and orbit polytopes") {
    RootData gl3 = RootData::gl(3);
    CHECK(rep::dual_weight(gl3, {2, 1, 0}) == Weight{0, -1, -2});
    SUBCASE("GL2 orbit segment") {
        auto p = rep::weight_polytope(RootData::gl(2), {1, 0});
        CHECK(p.vertices() == std::vector<Vec>{v2(0, 1), v2(1, 0)});
    }
    SUBCASE("zero weight gives the origin") {
        auto p = rep::weight_polytope(gl3, {0, 0, 0});
        CHECK(p.affine_dim() == 0);
    }
    SUBCASE("orbit polytopes add for weights in the same chamber") {
        auto a = rep::weight_polytope(gl3, {2, 1, 0});
        auto b = rep::weight_polytope(gl3, {1, 0, 0});
        CHECK(minkowski_sum(a, b) == rep::weight_polytope(gl3, {3, 1, 0}));
    }
}

TEST_CASE("tensor product decompositions") {
    RootData gl2 = RootData::gl(2);
    SUBCASE("standard square for GL2") {
        auto dec = rep::tensor_decompose(gl2, {1, 0}, {1, 0});
        REQUIRE(dec.size() == 2);
        CHECK(dec[0].first == Weight{2, 0});
        CHECK(dec[0].second == 1);
        CHECK(dec[1].first == Weight{1, 1});
        CHECK(dec[1].second == 1);
    }
    RootData gl3 = RootData::gl(3);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> d(0, 3);
    for (int trial = 0; trial < 5; ++trial) {
        Weight a = {d(rng) + 3, d(rng), 0}, b = {d(rng) + 3, d(rng), 0};
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        auto dec = rep::tensor_decompose(gl3, a, b);

        // the Cartan component appears with multiplicity exactly one
        Weight top = rep::add_weights(a, b);
        bool found = false;
        for (const auto& [w, m] : dec)
            if (w == top) {
                found = true;
                CHECK(m == 1);
            }
        CHECK(found);

        // dimension consistency and orbit-hull containment
        Int lhs = 0;
        auto hull = rep::weight_polytope(gl3, top);
        for (const auto& [w, m] : dec) {
            lhs += Int(m) * rep::weyl_dim(gl3, w);
            Vec wv(w.size());
            for (size_t i = 0; i < w.size(); ++i) wv[i] = Rat(w[i]);
            CHECK(hull.contains(wv));
            CHECK(rep::is_dominant(gl3, w));
        }
        CHECK(lhs == rep::weyl_dim(gl3, a) * rep::weyl_dim(gl3, b));
    }
}

TEST_CASE("gc additivity holds exactly") {
    RootData gl3 = RootData::gl(3);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 3);
    for (int trial = 0; trial < 5; ++trial) {
        Weight a = {static_cast<long long>(d(rng)) + 3, d(rng), 0};
        Weight b = {static_cast<long long>(d(rng)) + 3, d(rng), 0};
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        auto pa = rep::gc_polytope(gl3, a);
        auto pb = rep::gc_polytope(gl3, b);
        auto psum = rep::gc_polytope(gl3, rep::add_weights(a, b));
        CHECK(minkowski_sum(pa, pb) == psum);
    }
}

TEST_CASE("reduced weyl polynomial") {
    SUBCASE("GL2 at a generic point") {
        auto delta = geom::Polytope::point(v2(3, 1));
        auto f = rep::reduced_weyl_polynomial(delta, RootData::gl(2));
        CHECK(f.degree() == 1);
        CHECK(f.evaluate(v2(5, 2)) == 3);  // lambda_1 - lambda_2
    }
    SUBCASE("a wall removes its root") {
        auto delta = geom::Polytope::point(v2(1, 1));
        auto f = rep::reduced_weyl_polynomial(delta, RootData::gl(2));
        CHECK(f.degree() == 0);
        CHECK(f.evaluate(v2(9, 9)) == 1);
    }
    SUBCASE("torus factors contribute nothing") {
        auto delta = geom::Polytope::point(v2(1, 2));
        auto f = rep::reduced_weyl_polynomial(delta, RootData::torus(2));
        CHECK(f.degree() == 0);
        CHECK(f.evaluate(v2(4, 4)) == 1);
    }
    SUBCASE("GL3 normalizer uses rho pairings") {
        auto delta = geom::Polytope::point(v3(2, 1, 0));
        auto f = rep::reduced_weyl_polynomial(delta, RootData::gl(3));
        // product of (l1-l2)(l2-l3)(l1-l3)/2 evaluated at (2,1,0)
        CHECK(f.evaluate(v3(2, 1, 0)) == 1);
        CHECK(f.evaluate(v3(4, 2, 0)) == 2 * 2 * Rat(4) / 2);
    }
}

TEST_CASE("group parsing") {
    CHECK(RootData::parse("GL3").name() == "GL3");
    CHECK(RootData::parse("gl(4)").name() == "GL4");
    CHECK(RootData::parse("T2").name() == "T2");
    CHECK(RootData::parse("GL2xT1xGL3").dim() == 6);
    CHECK_THROWS_AS(RootData::parse("SO5"), input_error);
}
