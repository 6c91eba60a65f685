#ifndef OKB_GEOMETRY_HPP
#define OKB_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "okb/polytope.hpp"

namespace okb::geom {

// A (possibly non-full-rank) lattice: integer combinations of the basis rows.
struct Lattice {
    int ambient_dim = 0;
    IMat basis;  // independent integer rows

    static Lattice standard(int n);
    int rank() const { return static_cast<int>(basis.size()); }
    void validate() const;  // throws input_error on dependent rows / bad dims
};

// Sublattice of L parallel to the affine hull of P (basis rows), or nullopt
// if its rank is smaller than dim P (the span is irrational for L).
std::optional<IMat> parallel_sublattice(const Polytope& p, const Lattice& l);

// Intrinsic volume of P in its affine hull, normalized so the smallest cell
// of the parallel sublattice of L has measure 1. Points have volume 1.
Rat normalized_volume(const Polytope& p, const Lattice& l);

// k-dimensional normalized volume w.r.t. the standard lattice; returns 0
// when dim P < k. This is the Euclidean volume used by mixed volumes.
Rat volume_of_dim(const Polytope& p, int k);

// Points of (offset + L) inside P, sorted lexicographically.
std::vector<Vec> lattice_points(const Polytope& p, const Lattice& l,
                                const Vec& offset);
std::vector<Vec> lattice_points(const Polytope& p, const Lattice& l);

// Mixed volume V(P_1, ..., P_n) of n polytopes in R^n via inclusion-exclusion
// polarization of the Euclidean volume. Symmetric and Minkowski-multilinear.
Rat mixed_volume(const std::vector<Polytope>& ps);

// normalizer * prod_j (<coeff_j, x> + constant_j). Forms with zero coefficient
// vector are folded into the normalizer on construction.
class LinearFormProduct {
public:
    struct Form {
        Vec coeff;
        Rat constant;
    };

    LinearFormProduct() = default;
    LinearFormProduct(std::vector<Form> forms, const Rat& normalizer);
    static LinearFormProduct constant(const Rat& c, int dim);

    Rat evaluate(const Vec& x) const;
    int degree() const { return static_cast<int>(forms_.size()); }
    int dim() const { return dim_; }
    bool is_homogeneous() const;
    LinearFormProduct top_homogeneous() const;  // drop all constants
    const std::vector<Form>& forms() const { return forms_; }
    const Rat& normalizer() const { return normalizer_; }

private:
    std::vector<Form> forms_;
    Rat normalizer_ = 1;
    int dim_ = 0;
};

// Exact integral of f over P with respect to the L-normalized measure on the
// affine hull of P (triangulation + Dirichlet moments in barycentric form).
Rat integrate_linear_form_product(const Polytope& p, const LinearFormProduct& f,
                                  const Lattice& l);

// Polarization of Int(P) = integral of f over P w.r.t. the ambient standard
// lattice (Int vanishes on lower-dimensional bodies). Requires f homogeneous
// with degree(f) + ambient_dim == n = number of bodies.
Rat mixed_integral(const std::vector<Polytope>& ps, const LinearFormProduct& f);

// Fiber P ∩ map^{-1}(y) in fiber coordinates: x = base_point + sum z_j frame_j
// with frame rows a saturated integer kernel basis of the map.
struct SlicedPolytope {
    Polytope fiber;   // in z-coordinates (dim = kernel rank of the map)
    Vec base_point;   // a particular preimage of y (defined when fiber nonempty)
    IMat frame;       // saturated kernel basis rows
};

SlicedPolytope slice(const Polytope& p, const Mat& map, const Vec& y);

}  // namespace okb::geom

#endif
