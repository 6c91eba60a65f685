#ifndef OKB_MEASURES_HPP
#define OKB_MEASURES_HPP

#include <vector>

#include "okb/semigroup.hpp"

namespace okb::dh {

// Level-preserving linear map (k, x) -> (k, T x + k * shift). The shift term
// lets affine per-level maps (weight readings, centered projections) stay in
// the same framework; shift = 0 is the plain Id ⊕ T case.
struct LevelLinearMap {
    IMat t;      // m x n integer matrix
    IVec shift;  // m entries

    static LevelLinearMap linear(IMat t);
    static LevelLinearMap affine(IMat t, IVec shift);
    static LevelLinearMap identity(int n);

    int domain_dim() const { return t.empty() ? 0 : static_cast<int>(t[0].size()); }
    int target_dim() const { return static_cast<int>(t.size()); }
    sgp::Point apply(long k, const sgp::Point& x) const;
    Vec apply_level1(const Vec& x) const;  // T x + shift
    Mat linear_part() const;               // rational copy of t
};

struct DiscreteMeasure {
    long k = 0;
    std::vector<std::pair<Vec, Rat>> atoms;  // (position, mass), sorted by position
    Rat total_mass() const;
};

// Affine frame for the base body: y = origin + sum u_i frame_i. Grids and
// densities live in u-coordinates so lower-dimensional bases stay exact.
struct BaseFrame {
    Vec origin;
    Mat frame;  // d rows spanning the direction space of the base
    Mat dual;   // d rows with <dual_i, frame_j> = delta_ij

    static BaseFrame standard(int m);
    static BaseFrame for_polytope(const geom::Polytope& base);
    int dim() const { return static_cast<int>(frame.size()); }
    Vec to_u(const Vec& y) const;
    Vec to_y(const Vec& u) const;
};

// Rational box grid in frame coordinates.
struct Grid {
    Vec lo, hi;
    std::vector<int> shape;

    static Grid cover(const BaseFrame& frame, const geom::Polytope& base,
                      std::vector<int> shape);
    long long cell_count() const;
    void cell_bounds(long long index, Vec* cl, Vec* ch) const;
    Vec cell_center(long long index) const;
    // cell containing u (upper boundary points fall into the last cell);
    // -1 if outside the grid box
    long long locate(const Vec& u) const;
};

// mu_k = sum over (k,y) in T(S'_k) of fiber-count * delta_{y/k}
DiscreteMeasure multiplicity_measure(const sgp::Semigroup& s_prime,
                                     const LevelLinearMap& t, long k);

// Exact density at base points: the fiber_dim-dimensional normalized volume
// of the fiber of delta_prime over y (0 when the fiber is lower-dimensional).
// Fibers are measured in the saturated integer kernel frame of the map.
std::vector<Rat> dh_exact_density(const geom::Polytope& delta_prime,
                                  const LevelLinearMap& t,
                                  const std::vector<Vec>& base_points);
Rat dh_density_at(const geom::Polytope& delta_prime, const LevelLinearMap& t,
                  const Vec& y, int fiber_dim);

// body ∩ t^{-1}(cell), the slab preimage of a grid cell.
geom::Polytope cell_preimage(const geom::Polytope& body, const LevelLinearMap& t,
                             const BaseFrame& frame, const Vec& cell_lo, const Vec& cell_hi);

// Exact mass that the pushforward of the lambda-normalized Lebesgue measure
// on `body` assigns to a grid cell (u-coordinates of the frame).
Rat exact_cell_mass(const geom::Polytope& body, const LevelLinearMap& t,
                    const BaseFrame& frame, const Vec& cell_lo, const Vec& cell_hi,
                    const geom::Lattice& lambda);

struct CellRow {
    Vec center_u;
    Vec center_y;
    Rat exact_mass;
    Rat empirical_mass;
};

struct CompareReport {
    long k = 0;
    Rat l1_distance;       // sum over cells of |empirical - exact|
    Rat empirical_total;   // #S'_k / k^{q'}
    Rat exact_total;       // Vol_{q'}(Delta')
    std::vector<CellRow> cells;
};

// Rescaled empirical measures mu_k / k^{q'} binned on the grid against the
// exact pushforward cell masses. The second form takes the exact body and its
// lattice explicitly (for semigroups whose bodies are known independently).
std::vector<CompareReport> dh_empirical_compare(const sgp::Semigroup& s_prime,
                                                const LevelLinearMap& t,
                                                const std::vector<long>& k_list,
                                                const BaseFrame& frame, const Grid& grid);
std::vector<CompareReport> dh_empirical_compare(const sgp::Semigroup& s_prime,
                                                const LevelLinearMap& t,
                                                const std::vector<long>& k_list,
                                                const BaseFrame& frame, const Grid& grid,
                                                const geom::Polytope& body,
                                                const geom::Lattice& lambda);

struct FujitaStep {
    long k = 0;
    Rat l1_to_limit;      // cell-mass distance between O_{1/k}(rho_k)/k^{q'} and d mu
    Rat support_gap_max;  // max over facet normals of Delta' of the support gap
    Rat total_mass;       // mass of the rescaled step measure
    geom::Polytope rescaled_body;  // conv(S'_k)/k
};

// Fujita approximation: subsemigroups generated by single levels, their limit
// measures rescaled by O_{1/k}, compared against the measure of the pair.
std::vector<FujitaStep> fujita_sequence(const sgp::Semigroup& s_prime,
                                        const LevelLinearMap& t,
                                        const std::vector<long>& k_list,
                                        const BaseFrame& frame, const Grid& grid);
std::vector<FujitaStep> fujita_sequence(const sgp::Semigroup& s_prime,
                                        const LevelLinearMap& t,
                                        const std::vector<long>& k_list,
                                        const BaseFrame& frame, const Grid& grid,
                                        const geom::Polytope& body,
                                        const geom::Lattice& lambda);

// CSV export, one row per cell: cell-center coordinates ("p/q", base
// coordinates), exact density, empirical density, absolute difference.
// cell_volume converts the stored cell masses into densities.
std::string compare_report_csv(const CompareReport& report, const Rat& cell_volume);

}  // namespace okb::dh

#endif
