#include <doctest.h>

#include "okb/errors.hpp"
#include "okb/measures.hpp"
#include "test_support.hpp"

using namespace okb;
using namespace okb::test;
using geom::Polytope;

TEST_CASE("hull drops interior points and orders vertices") {
    Polytope p = Polytope::from_points({v2(0, 0), v2(1, 0), v2(0, 1), Vec{Rat(1, 2), Rat(1, 4)}});
    REQUIRE(p.vertices().size() == 3);
    CHECK(p.vertices()[0] == v2(0, 0));
    CHECK(p.vertices()[1] == v2(0, 1));
    CHECK(p.vertices()[2] == v2(1, 0));
    CHECK(p.affine_dim() == 2);
}

TEST_CASE("hull of the cube") {
    Polytope c = unit_cube();
    CHECK(c.vertices().size() == 8);
    CHECK(c.facets().size() == 6);
    CHECK(c.equalities().empty());
}

TEST_CASE("hull of pairwise sums is the pentagon") {
    std::vector<Vec> sums;
    for (const auto& a : unit_square().vertices())
        for (const auto& b : std_triangle().vertices()) sums.push_back(la::add(a, b));
    Polytope p = Polytope::from_points(sums);
    std::vector<Vec> expect = {v2(0, 0), v2(0, 2), v2(1, 2), v2(2, 0), v2(2, 1)};
    CHECK(p.vertices() == expect);
}

TEST_CASE("hull is idempotent") {
    std::mt19937 rng(140901);
    for (int trial = 0; trial < 10; ++trial) {
        Polytope p = random_polytope(rng, 3, 8, 4);
        Polytope again = Polytope::from_points(p.vertices());
        CHECK(again == p);
    }
}

TEST_CASE("hull rejects mixed dimensions and empty input") {
    CHECK_THROWS_AS(Polytope::from_points({v2(0, 0), v3(0, 0, 0)}), input_error);
    CHECK_THROWS_AS(Polytope::from_points({}), input_error);
}

TEST_CASE("minkowski sums") {
    Polytope sq = unit_square();
    SUBCASE("translation by a point") {
        Polytope pt = Polytope::point(v2(3, -2));
        CHECK(minkowski_sum(sq, pt) == sq.translate(v2(3, -2)));
    }
    SUBCASE("segments to a square") {
        Polytope e1 = Polytope::from_points({v2(0, 0), v2(1, 0)});
        Polytope e2 = Polytope::from_points({v2(0, 0), v2(0, 1)});
        CHECK(minkowski_sum(e1, e2) == sq);
    }
    SUBCASE("pentagon area via the shoelace oracle") {
        Polytope p = minkowski_sum(sq, std_triangle());
        CHECK(shoelace(p) == Rat(7, 2));
        CHECK(normalized_volume(p, geom::Lattice::standard(2)) == Rat(7, 2));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(minkowski_sum(sq, unit_cube()), input_error);
    }
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(unit_cube(), geom::Lattice::standard(3)) == 1);
    CHECK(normalized_volume(std_triangle(), geom::Lattice::standard(2)) == Rat(1, 2));
    // segment (0,0)-(2,4): the parallel sublattice of Z^2 is generated by
    // (1,2), and the segment covers two of its cells
    Polytope seg = Polytope::from_points({v2(0, 0), v2(2, 4)});
    auto sub = geom::parallel_sublattice(seg, geom::Lattice::standard(2));
    REQUIRE(sub.has_value());
    REQUIRE(sub->size() == 1);
    CHECK((*sub)[0] == IVec{1, 2});
    CHECK(normalized_volume(seg, geom::Lattice::standard(2)) == 2);
}

TEST_CASE("normalized volume needs a rational span") {
    // lattice of rank 1 cannot measure a segment outside its span
    geom::Lattice l;
    l.ambient_dim = 2;
    l.basis = {IVec{1, 0}};
    Polytope seg = Polytope::from_points({v2(0, 0), v2(0, 1)});
    CHECK_THROWS_AS(normalized_volume(seg, l), input_error);
}

TEST_CASE("volume is invariant under unimodular maps") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        Polytope p = random_polytope(rng, 3, 7, 3);
        // random unimodular matrix: elementary row operations on the identity
        Mat u(3, Vec(3, Rat(0)));
        for (int i = 0; i < 3; ++i) u[i][i] = 1;
        for (int step = 0; step < 6; ++step) {
            int i = d(rng) & 1, j = 2 - (d(rng) & 1);
            if (i == j) continue;
            Rat c(d(rng));
            for (int k = 0; k < 3; ++k) u[i][k] += c * u[j][k];
        }
        Vec t = v3(d(rng), d(rng), d(rng));
        std::vector<Vec> img;
        for (const auto& v : p.vertices()) img.push_back(la::add(la::mat_vec(u, v), t));
        Polytope q = Polytope::from_points(img);
        CHECK(normalized_volume(p, geom::Lattice::standard(3)) ==
              normalized_volume(q, geom::Lattice::standard(3)));
    }
}

TEST_CASE("lattice points") {
    SUBCASE("dilated simplex has 6 points") {
        Polytope p = std_triangle().dilate(2);
        auto pts = lattice_points(p, geom::Lattice::standard(2));
        CHECK(pts.size() == 6);
    }
    SUBCASE("single integer point") {
        auto pts = lattice_points(Polytope::point(v2(3, 5)), geom::Lattice::standard(2));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == v2(3, 5));
    }
    SUBCASE("coset enumeration") {
        // even lattice 2Z^2 shifted by (1,0) inside [0,2]^2
        geom::Lattice l;
        l.ambient_dim = 2;
        l.basis = {IVec{2, 0}, IVec{0, 2}};
        Polytope box = unit_square().dilate(2);
        auto pts = lattice_points(box, l, v2(1, 0));
        REQUIRE(pts.size() == 2);
        CHECK(pts[0] == v2(1, 0));
        CHECK(pts[1] == v2(1, 2));
    }
}

TEST_CASE("mixed volume") {
    Polytope sq = unit_square();
    SUBCASE("diagonal reduces to volume") { CHECK(geom::mixed_volume({sq, sq}) == 1); }
    SUBCASE("two segments") {
        Polytope e1 = Polytope::from_points({v2(0, 0), v2(1, 0)});
        Polytope e2 = Polytope::from_points({v2(0, 0), v2(0, 1)});
        CHECK(geom::mixed_volume({e1, e2}) == Rat(1, 2));
    }
    SUBCASE("square and triangle") {
        CHECK(geom::mixed_volume({sq, std_triangle()}) == 1);
    }
    SUBCASE("count must match the dimension") {
        CHECK_THROWS_AS(geom::mixed_volume({sq}), input_error);
    }
}

TEST_CASE("mixed volume is symmetric and multilinear") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 6; ++trial) {
        int dim = 2 + (trial % 2);
        std::vector<Polytope> ps;
        for (int i = 0; i < dim; ++i) ps.push_back(random_polytope(rng, dim, dim + 2, 2));
        Polytope extra = random_polytope(rng, dim, dim + 2, 2);

        Rat direct = geom::mixed_volume(ps);
        std::vector<Polytope> perm(ps.rbegin(), ps.rend());
        CHECK(geom::mixed_volume(perm) == direct);

        std::vector<Polytope> with_sum = ps;
        with_sum[0] = minkowski_sum(ps[0], extra);
        std::vector<Polytope> with_extra = ps;
        with_extra[0] = extra;
        CHECK(geom::mixed_volume(with_sum) == direct + geom::mixed_volume(with_extra));
    }
}

TEST_CASE("brunn-minkowski for volumes") {
    std::mt19937 rng(5150);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int trial = 0; trial < 4; ++trial) {
            Polytope p = random_polytope(rng, dim, dim + 3, 3);
            Polytope q = random_polytope(rng, dim, dim + 3, 3);
            Rat a = normalized_volume(p, geom::Lattice::standard(dim));
            Rat b = normalized_volume(q, geom::Lattice::standard(dim));
            Rat c = normalized_volume(minkowski_sum(p, q), geom::Lattice::standard(dim));
            CHECK(root_sum_leq(a, b, c, static_cast<unsigned>(dim)));
        }
    }
}

TEST_CASE("integration of linear form products") {
    geom::Lattice z2 = geom::Lattice::standard(2);
    SUBCASE("constant one gives the volume") {
        std::mt19937 rng(99);
        Polytope p = random_polytope(rng, 2, 6, 3);
        auto one = geom::LinearFormProduct::constant(1, 2);
        CHECK(integrate_linear_form_product(p, one, z2) == normalized_volume(p, z2));
    }
    SUBCASE("x over the triangle") {
        geom::LinearFormProduct f({{v2(1, 0), Rat(0)}}, 1);
        CHECK(integrate_linear_form_product(std_triangle(), f, z2) == Rat(1, 6));
    }
    SUBCASE("lambda over the unit interval") {
        Polytope seg = Polytope::from_points({Vec{Rat(0)}, Vec{Rat(1)}});
        geom::LinearFormProduct f({{Vec{Rat(1)}, Rat(0)}}, 1);
        CHECK(integrate_linear_form_product(seg, f, geom::Lattice::standard(1)) == Rat(1, 2));
    }
    SUBCASE("degree-2 product against a hand integral") {
        // ∫ over [0,1]^2 of x(x+y) = ∫ x^2 + xy = 1/3 + 1/4
        geom::LinearFormProduct f({{v2(1, 0), Rat(0)}, {v2(1, 1), Rat(0)}}, 1);
        CHECK(integrate_linear_form_product(unit_square(), f, z2) == Rat(1, 3) + Rat(1, 4));
    }
}

TEST_CASE("mixed integral") {
    Polytope sq = unit_square();
    auto one2 = geom::LinearFormProduct::constant(1, 2);
    SUBCASE("constant form reduces to mixed volume") {
        Polytope e1 = Polytope::from_points({v2(0, 0), v2(1, 0)});
        Polytope e2 = Polytope::from_points({v2(0, 0), v2(0, 1)});
        CHECK(geom::mixed_integral({e1, e2}, one2) == geom::mixed_volume({e1, e2}));
        CHECK(geom::mixed_integral({e1, e2}, one2) == Rat(1, 2));
    }
    SUBCASE("diagonal identity") {
        CHECK(geom::mixed_integral({sq, sq}, one2) ==
              integrate_linear_form_product(sq, one2, geom::Lattice::standard(2)));
    }
    SUBCASE("degree-1 form over three bodies in the plane") {
        geom::LinearFormProduct f({{v2(1, 1), Rat(0)}}, 1);
        Rat diag = geom::mixed_integral({sq, sq, sq}, f);
        CHECK(diag == integrate_linear_form_product(sq, f, geom::Lattice::standard(2)));
    }
    SUBCASE("inhomogeneous forms are rejected") {
        geom::LinearFormProduct f({{v2(1, 0), Rat(1)}}, 1);
        CHECK_THROWS_AS(geom::mixed_integral({sq, sq, sq}, f), input_error);
    }
}

TEST_CASE("slices") {
    Mat proj_x = {Vec{Rat(1), Rat(0)}};
    SUBCASE("square at x = 1/2") {
        auto sl = geom::slice(unit_square(), proj_x, Vec{Rat(1, 2)});
        REQUIRE(!sl.fiber.is_empty());
        CHECK(normalized_volume(sl.fiber, geom::Lattice::standard(1)) == 1);
    }
    SUBCASE("triangle at x = 1/4 has length 3/4") {
        auto sl = geom::slice(std_triangle(), proj_x, Vec{Rat(1, 4)});
        CHECK(normalized_volume(sl.fiber, geom::Lattice::standard(1)) == Rat(3, 4));
    }
    SUBCASE("slice at a vertex is a point") {
        auto sl = geom::slice(std_triangle(), proj_x, Vec{Rat(1)});
        CHECK(sl.fiber.affine_dim() == 0);
    }
    SUBCASE("empty fiber is the empty polytope") {
        auto sl = geom::slice(std_triangle(), proj_x, Vec{Rat(2)});
        CHECK(sl.fiber.is_empty());
    }
}

TEST_CASE("fubini consistency through interpolated slice volumes") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 3; ++trial) {
        int dim = 2 + (trial % 2);
        Polytope p = random_polytope(rng, dim, dim + 3, 3);
        Mat proj = {Vec(dim, Rat(0))};
        proj[0][0] = 1;

        std::vector<Rat> breaks;
        for (const auto& v : p.vertices()) breaks.push_back(v[0]);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        Rat total = 0;
        for (size_t i = 0; i + 1 < breaks.size(); ++i) {
            const Rat a = breaks[i], b = breaks[i + 1];
            std::vector<Rat> xs, ys;
            for (int s = 1; s <= 10; ++s) {
                Rat t = a + (b - a) * Rat(s, 11);
                xs.push_back(t);
                auto sl = geom::slice(p, proj, Vec{t});
                ys.push_back(sl.fiber.is_empty() || sl.fiber.affine_dim() < dim - 1
                                 ? Rat(0)
                                 : normalized_volume(sl.fiber, geom::Lattice::standard(dim - 1)));
            }
            total += poly_integral(lagrange(xs, ys), a, b);
        }
        CHECK(total == normalized_volume(p, geom::Lattice::standard(dim)));
    }
}

TEST_CASE("h-representation round trip") {
    Polytope p = std_triangle();
    Polytope q = Polytope::from_hrep(2, p.facets(), p.equalities());
    CHECK(q == p);
    SUBCASE("unbounded input is an input error") {
        std::vector<geom::HalfSpace> half = {{v2(1, 0), Rat(1)}};
        CHECK_THROWS_AS(Polytope::from_hrep(2, half, {}), input_error);
    }
    SUBCASE("infeasible input is empty") {
        std::vector<geom::HalfSpace> bad = {{v2(1, 0), Rat(0)}, {v2(-1, 0), Rat(-1)}};
        CHECK(Polytope::from_hrep(2, bad, {}).is_empty());
    }
}
