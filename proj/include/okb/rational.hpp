#ifndef OKB_RATIONAL_HPP
#define OKB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace okb {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rat>;    // point / direction with exact coordinates
using IVec = std::vector<Int>;   // integer lattice vector
using Mat = std::vector<Vec>;    // row-major exact matrix
using IMat = std::vector<IVec>;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// Accepts "p", "p/q", and plain decimal integers with optional sign.
Rat rat_from_string(const std::string& s);

Vec to_vec(const IVec& v);
bool is_integral(const Rat& q);
Int to_int(const Rat& q);  // throws internal_error if q is not an integer

// floor(p/q) as an exact integer
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Largest integer r with r^n <= x (x >= 0). Used for exact n-th root bounds.
Int iroot(const Int& x, unsigned n);

// Lexicographic comparison of exact vectors.
int lex_compare(const Vec& a, const Vec& b);

}  // namespace okb

#endif
