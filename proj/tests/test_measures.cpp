#include <doctest.h>

#include "okb/errors.hpp"
#include "okb/measures.hpp"
#include "test_support.hpp"

using namespace okb;
using namespace okb::test;
using dh::LevelLinearMap;
using sgp::Semigroup;

namespace {

Semigroup square_cone() {
    return Semigroup::from_generators(2, {{1, {0, 0}}, {1, {1, 0}}, {1, {0, 1}}, {1, {1, 1}}});
}

Semigroup triangle_cone() {
    return Semigroup::from_generators(2, {{1, {0, 0}}, {1, {1, 0}}, {1, {0, 1}}});
}

LevelLinearMap first_coord() { return LevelLinearMap::linear({IVec{1, 0}}); }

}  // namespace

TEST_CASE("multiplicity measures count fibers") {
    SUBCASE("square cone projected to the first coordinate") {
        auto mu = dh::multiplicity_measure(square_cone(), first_coord(), 6);
        REQUIRE(mu.atoms.size() == 7);
        for (const auto& [pos, mass] : mu.atoms) CHECK(mass == 7);  // k+1 rows per column
        CHECK(mu.total_mass() == 49);                               // #S'_6 = 7*7
    }
    SUBCASE("identity map gives unit masses") {
        auto mu = dh::multiplicity_measure(triangle_cone(), LevelLinearMap::identity(2), 5);
        CHECK(mu.total_mass() == Rat(static_cast<long>(mu.atoms.size())));
        for (const auto& [pos, mass] : mu.atoms) CHECK(mass == 1);
    }
    SUBCASE("triangle cone row counts") {
        long k = 8;
        auto mu = dh::multiplicity_measure(triangle_cone(), first_coord(), k);
        for (const auto& [pos, mass] : mu.atoms) {
            // mass at j/k is k - j + 1
            Rat j = pos[0] * k;
            CHECK(mass == Rat(k) - j + 1);
        }
        CHECK(mu.total_mass() == Rat((k + 1) * (k + 2) / 2));
    }
    SUBCASE("every atom lies in the projected body") {
        auto s = triangle_cone();
        auto body = sgp::newton_okounkov_body(s).body;
        auto mu = dh::multiplicity_measure(s, first_coord(), 11);
        for (const auto& [pos, mass] : mu.atoms) {
            std::vector<Vec> img;
            for (const auto& v : body.vertices()) img.push_back({v[0]});
            CHECK(geom::Polytope::from_points(img).contains(pos));
        }
    }
}

TEST_CASE("exact densities are fiber volumes") {
    SUBCASE("square projects to the constant density") {
        auto dens = dh::dh_exact_density(unit_square(), first_coord(),
                                         {Vec{Rat(0)}, Vec{Rat(1, 3)}, Vec{Rat(1, 2)}, Vec{Rat(1)}});
        for (const auto& d : dens) CHECK(d == 1);
    }
    SUBCASE("triangle projects to 1 - t") {
        std::vector<Vec> pts = {Vec{Rat(0)}, Vec{Rat(1, 4)}, Vec{Rat(1, 2)}, Vec{Rat(3, 4)}};
        auto dens = dh::dh_exact_density(std_triangle(), first_coord(), pts);
        for (size_t i = 0; i < pts.size(); ++i) CHECK(dens[i] == 1 - pts[i][0]);
    }
    SUBCASE("outside the image the density vanishes") {
        auto dens = dh::dh_exact_density(std_triangle(), first_coord(), {Vec{Rat(2)}});
        CHECK(dens[0] == 0);
    }
    SUBCASE("identity map gives the indicator normalization") {
        auto dens = dh::dh_exact_density(std_triangle(), LevelLinearMap::identity(2),
                                         {Vec{Rat(1, 4), Rat(1, 4)}, Vec{Rat(2), Rat(2)}});
        CHECK(dens[0] == 1);
        CHECK(dens[1] == 0);
    }
}

TEST_CASE("exact cell masses integrate the density") {
    // the pushforward masses over a covering grid add up to Vol(Delta')
    auto s = triangle_cone();
    auto body = sgp::newton_okounkov_body(s).body;
    auto t = first_coord();
    std::vector<Vec> img;
    for (const auto& v : body.vertices()) img.push_back(t.apply_level1(v));
    auto base = geom::Polytope::from_points(img);
    auto frame = dh::BaseFrame::for_polytope(base);
    auto grid = dh::Grid::cover(frame, base, {8});
    geom::Lattice lambda{2, sgp::analyze(s).level_lattice};
    Rat total = 0;
    for (long long c = 0; c < grid.cell_count(); ++c) {
        Vec cl, ch;
        grid.cell_bounds(c, &cl, &ch);
        total += dh::exact_cell_mass(body, t, frame, cl, ch, lambda);
    }
    CHECK(total == normalized_volume(body, geom::Lattice::standard(2)));
    CHECK(total == Rat(1, 2));
}

TEST_CASE("empirical measures converge to the exact density") {
    auto t = first_coord();
    auto run = [&](const Semigroup& s, const std::vector<long>& ks) {
        auto body = sgp::newton_okounkov_body(s).body;
        std::vector<Vec> img;
        for (const auto& v : body.vertices()) img.push_back(t.apply_level1(v));
        auto base = geom::Polytope::from_points(img);
        auto frame = dh::BaseFrame::for_polytope(base);
        auto grid = dh::Grid::cover(frame, base, {10});
        return dh::dh_empirical_compare(s, t, ks, frame, grid);
    };
    SUBCASE("triangle cone at k = 100") {
        auto reps = run(triangle_cone(), {50, 100});
        CHECK(reps[1].l1_distance < Rat(1, 20));
        CHECK(reps[1].l1_distance < reps[0].l1_distance);
        // total mass: (k+1)(k+2)/2k^2 against 1/2
        CHECK(reps[1].exact_total == Rat(1, 2));
        Rat mass_err = reps[1].empirical_total - reps[1].exact_total;
        if (mass_err < 0) mass_err = -mass_err;
        CHECK(mass_err < Rat(1, 20));
    }
    SUBCASE("square cone at k = 100") {
        auto reps = run(square_cone(), {100});
        CHECK(reps[0].l1_distance < Rat(1, 20));
        CHECK(reps[0].exact_total == 1);
    }
}

TEST_CASE("total mass identity is exact at every level") {
    auto s = square_cone();
    for (long k : {1L, 2L, 5L, 9L}) {
        auto mu = dh::multiplicity_measure(s, first_coord(), k);
        CHECK(mu.total_mass() == Rat(static_cast<long>(s.level(k).size())));
    }
}

TEST_CASE("fujita sequence refines toward the pair measure") {
    auto t = LevelLinearMap::identity(1);
    SUBCASE("saturated degree-one semigroup is already exact") {
        auto s = Semigroup::from_generators(1, {{1, {0}}, {1, {1}}});
        auto body = sgp::newton_okounkov_body(s).body;
        auto frame = dh::BaseFrame::for_polytope(body);
        auto grid = dh::Grid::cover(frame, body, {6});
        auto steps = dh::fujita_sequence(s, t, {1, 3}, frame, grid);
        CHECK(steps[0].l1_to_limit == 0);
        CHECK(steps[1].l1_to_limit == 0);
        CHECK(steps[0].support_gap_max == 0);
    }
    SUBCASE("gap semigroup approaches [0,3]") {
        auto s = Semigroup::from_generators(1, {{1, {0}}, {1, {1}}, {1, {3}}});
        auto body = sgp::newton_okounkov_body(s).body;
        auto frame = dh::BaseFrame::for_polytope(body);
        auto grid = dh::Grid::cover(frame, body, {6});
        auto steps = dh::fujita_sequence(s, t, {1, 2, 4, 8}, frame, grid);
        for (const auto& st : steps) {
            // conv(S'_k/k) stays inside the limit body
            for (const auto& v : st.rescaled_body.vertices()) CHECK(body.contains(v));
            CHECK(st.support_gap_max >= 0);
        }
        CHECK(steps[3].support_gap_max < steps[0].support_gap_max);
        CHECK(steps[3].l1_to_limit < steps[0].l1_to_limit);
    }
    SUBCASE("triangle cone: farther levels are closer") {
        auto s = triangle_cone();
        auto tc = first_coord();
        auto body = sgp::newton_okounkov_body(s).body;
        std::vector<Vec> img;
        for (const auto& v : body.vertices()) img.push_back(tc.apply_level1(v));
        auto base = geom::Polytope::from_points(img);
        auto frame = dh::BaseFrame::for_polytope(base);
        auto grid = dh::Grid::cover(frame, base, {8});
        auto steps = dh::fujita_sequence(s, tc, {2, 8}, frame, grid);
        CHECK(steps[1].l1_to_limit <= steps[0].l1_to_limit);
    }
}

TEST_CASE("csv export carries exact densities") {
    auto s = triangle_cone();
    auto t = first_coord();
    auto body = sgp::newton_okounkov_body(s).body;
    std::vector<Vec> img;
    for (const auto& v : body.vertices()) img.push_back(t.apply_level1(v));
    auto base = geom::Polytope::from_points(img);
    auto frame = dh::BaseFrame::for_polytope(base);
    auto grid = dh::Grid::cover(frame, base, {4});
    auto reps = dh::dh_empirical_compare(s, t, {10}, frame, grid);
    Rat cellvol = (grid.hi[0] - grid.lo[0]) / 4;
    std::string csv = dh::compare_report_csv(reps[0], cellvol);
    CHECK(csv.find("exact_density") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 cells
}
