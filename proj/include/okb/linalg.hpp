#ifndef OKB_LINALG_HPP
#define OKB_LINALG_HPP

#include <optional>
#include <vector>

#include "okb/rational.hpp"

namespace okb::la {

Rat dot(const Vec& a, const Vec& b);
Vec axpy(const Rat& c, const Vec& x, const Vec& y);  // c*x + y
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& x);
bool is_zero(const Vec& v);

Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& x);   // rows of m dotted with x
Mat mat_mul(const Mat& a, const Mat& b);

// In-place reduced row echelon form. Returns rank; records pivot columns.
size_t rref(Mat& m, std::vector<size_t>* pivot_cols = nullptr);
size_t rank(Mat m);
Rat det(Mat m);

// One solution of A x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Basis (as rows) of the rational kernel {x : A x = 0}.
Mat kernel(const Mat& a);

// ---- integer lattice routines ----

IVec ivec_sub(const IVec& a, const IVec& b);
bool ivec_is_zero(const IVec& v);

// Row-style Hermite normal form. Returns the nonzero rows (a canonical basis
// of the lattice generated by the input rows). If `transform` is non-null it
// receives the full unimodular U with U * input = [H; 0].
IMat hermite_normal_form(IMat rows, IMat* transform = nullptr);

// Saturated basis of {x in Z^n : A x = 0} (rows are basis vectors).
IMat integer_kernel(const IMat& a);

// Index [super : sub] for two bases of lattices of equal rank with
// span(sub) = span(super) and sub a sublattice of super.
Int lattice_index(const IMat& sub, const IMat& super);

// Primitive integer vector proportional to v (clears denominators, divides
// by gcd; direction preserved).
IVec primitive(const Vec& v);

// Rational coordinates c with sum_i c_i * basis[i] = target, or nullopt.
std::optional<Vec> coords_in_basis(const Mat& basis, const Vec& target);

}  // namespace okb::la

#endif
