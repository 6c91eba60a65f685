#ifndef OKB_POLYTOPE_HPP
#define OKB_POLYTOPE_HPP

#include <vector>

#include "okb/linalg.hpp"
#include "okb/rational.hpp"

namespace okb::geom {

// Half-space  <normal, x> <= offset. Normals are primitive integer vectors.
struct HalfSpace {
    Vec normal;
    Rat offset;
};

// Hyperplane  <normal, x> == offset (affine-hull equality).
struct Hyperplane {
    Vec normal;
    Rat offset;
};

// Extreme rays of the pointed cone {x : <row_i, x> >= 0 for all i}.
// Requires rank(rows) == dimension; rays are returned as primitive integer
// vectors, sorted lexicographically.
std::vector<IVec> dd_extreme_rays(const Mat& rows);

// A bounded convex polytope with exact rational data. Immutable after
// construction: the minimal vertex set (sorted lexicographically), the facet
// inequalities within the affine hull, and the affine-hull equalities are all
// derived on construction.
class Polytope {
public:
    static Polytope from_points(const std::vector<Vec>& points);
    // Bounded H-representations only; throws input_error if unbounded.
    static Polytope from_hrep(int ambient_dim, const std::vector<HalfSpace>& inequalities,
                              const std::vector<Hyperplane>& equalities = {});
    static Polytope empty(int ambient_dim);
    static Polytope point(const Vec& v);

    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }  // -1 when empty
    bool is_empty() const { return vertices_.empty(); }

    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<Hyperplane>& equalities() const { return equalities_; }
    // Rows spanning the direction space of the affine hull.
    const Mat& span_basis() const { return span_basis_; }

    bool contains(const Vec& p) const;
    Rat support(const Vec& direction) const;  // max over the polytope
    Vec vertex_average() const;

    Polytope translate(const Vec& t) const;
    Polytope dilate(const Rat& c) const;
    // Shrink toward the given center by factor theta in (0,1].
    Polytope shrink_toward(const Vec& center, const Rat& theta) const;

    bool operator==(const Polytope& other) const {
        return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
    }

private:
    Polytope() = default;
    void derive(const std::vector<Vec>& points);  // hull pipeline

    int ambient_dim_ = 0;
    int affine_dim_ = -1;
    std::vector<Vec> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<Hyperplane> equalities_;
    Mat span_basis_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// Deterministic triangulation of a full-dimensional point configuration given
// as the vertex list of its own hull: fan from the lexicographically least
// vertex over recursively triangulated facets. Returns index tuples.
std::vector<std::vector<int>> triangulate_indices(const std::vector<Vec>& hull_vertices);

}  // namespace okb::geom

#endif
