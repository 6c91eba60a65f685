#ifndef OKB_REP_HPP
#define OKB_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "okb/geometry.hpp"

namespace okb::rep {

using Weight = std::vector<long long>;
using WeightMultiplicityTable = std::map<Weight, long long>;

// GL(n) factors and torus factors in a fixed order; weights live in the
// concatenated coordinates.
struct RootData {
    struct Factor {
        enum class Kind { GL, Torus };
        Kind kind = Kind::GL;
        int rank = 1;  // n for GL(n); coordinate count for a torus
    };
    std::vector<Factor> factors;

    static RootData gl(int n);
    static RootData torus(int d);
    static RootData product(std::vector<Factor> fs);
    // "GL3", "GL2xT1", "T2", ... (case insensitive, 'x' separated)
    static RootData parse(const std::string& name);

    int dim() const;                  // total weight coordinates
    int num_positive_roots() const;   // N
    int pattern_dim() const;          // free Gelfand-Cetlin coordinates
    std::vector<IVec> positive_roots() const;
    Vec rho() const;                  // half-sum of positive roots
    std::string name() const;
};

bool is_dominant(const RootData& rd, const Weight& w);
void require_dominant(const RootData& rd, const Weight& w);

Weight scale_weight(const Weight& w, long k);
Weight add_weights(const Weight& a, const Weight& b);

// Full triangular array per GL factor (top row = weight slice included).
struct GCPattern {
    std::vector<std::vector<std::vector<long long>>> factor_rows;
    // free entries (rows below the top) concatenated across factors, in the
    // coordinate order used by gc_polytope
    std::vector<long long> free_coords() const;
    Weight weight(const RootData& rd) const;
};

Int weyl_dim(const RootData& rd, const Weight& w);

// Interlacing polytope in the free pattern coordinates (ambient dim = N).
geom::Polytope gc_polytope(const RootData& rd, const Weight& w);

struct GCEnumeration {
    std::vector<GCPattern> patterns;
    WeightMultiplicityTable table;
};

GCEnumeration gc_patterns(const RootData& rd, const Weight& w);
WeightMultiplicityTable character(const RootData& rd, const Weight& w);

Weight dual_weight(const RootData& rd, const Weight& w);
geom::Polytope weight_polytope(const RootData& rd, const Weight& w);  // conv(W·w)

// character arithmetic: convolve, then strip dominant leading terms
std::vector<std::pair<Weight, long long>> tensor_decompose(const RootData& rd,
                                                           const Weight& a, const Weight& b);

// f(x) = prod over positive roots not orthogonal to delta of <x,a>/<rho,a>
geom::LinearFormProduct reduced_weyl_polynomial(const geom::Polytope& delta,
                                                const RootData& rd);

}  // namespace okb::rep

#endif
