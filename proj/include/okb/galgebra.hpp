#ifndef OKB_GALGEBRA_HPP
#define OKB_GALGEBRA_HPP

#include <functional>
#include <optional>
#include <string>

#include "okb/measures.hpp"
#include "okb/rep.hpp"

namespace okb::galg {

// Laurent polynomial: exponent -> coefficient, exponents may be negative.
struct LaurentPoly {
    std::map<sgp::Point, Rat> terms;

    LaurentPoly& add_term(const sgp::Point& e, const Rat& c);
    bool zero() const;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

// Term-order valuation on Laurent polynomials: the minimal exponent under a
// lexicographic order on permuted variables. v(fg) = v(f) + v(g) and the
// leaves are one-dimensional.
struct TermOrderValuation {
    std::vector<int> var_order;

    static TermOrderValuation lex(int n);
    bool exp_less(const sgp::Point& a, const sgp::Point& b) const;
    sgp::Point value(const LaurentPoly& f) const;
};

struct ValuationLevel {
    long k = 0;
    long long dim = 0;                 // dim L^k by exact elimination
    std::vector<sgp::Point> images;    // v(L^k \ {0}); size equals dim
};

// Levels of the valuation semigroup of A_L, with the dimension identity
// checked level by level.
std::vector<ValuationLevel> valuation_semigroup(int n, const std::vector<LaurentPoly>& basis,
                                                const TermOrderValuation& v, long K);

struct ToricSubspaceSpec {
    int n = 0;
    std::vector<sgp::Point> exponents;  // monomial path when non-empty
    std::vector<LaurentPoly> polys;     // general path otherwise

    bool monomial() const { return !exponents.empty(); }
};

// The computable shadow of a graded algebra with a group action: the weight,
// multiplicity and string semigroups with their bodies, lattices and indices.
struct AlgebraView {
    std::string kind;        // toric-monomial | toric-valuation | flag-G | flag-T
    bool exact = true;       // false when bodies come from a cutoff
    int weight_dim = 0;      // ambient dimension of the moment body
    int hat_dim = 0;         // ambient dimension of the multiplicity body
    long variety_dim = 0;    // n in the intersection-index formulas
    Int degree_d = 1;        // Kodaira mapping degree (user input)

    sgp::Semigroup s_hat;        // multiplicity semigroup
    dh::LevelLinearMap pi_hat;   // projection onto the weight semigroup

    geom::Polytope delta;        // moment body
    geom::Polytope delta_hat;    // multiplicity body
    geom::Polytope delta_tilde;  // string body

    geom::Lattice lambda, lambda_hat, lambda_tilde;
    Int ind_s = 1, ind_s_hat = 1, ind_s_tilde = 1;
    int p = 0, p_hat = 0, q = 0;

    rep::RootData roots;          // torus data when there is no GL action
    geom::LinearFormProduct f;    // reduced Weyl polynomial on weight space

    std::function<Int(long)> hilbert;     // dim A_k
    std::function<Int(long)> mult_total;  // M(k) = # S_hat at level k

    rep::Weight lambda_star;  // flag views only
};

AlgebraView toric_algebra_view(const ToricSubspaceSpec& spec, long cutoff = 8,
                               const Int& degree_d = 1);

// level_store: levels of the multiplicity semigroup to materialize (needed by
// measure comparisons); small analysis levels are always included.
AlgebraView flag_algebra_view(int n, const rep::Weight& lambda, bool t_view,
                              const std::vector<long>& level_store = {},
                              const Int& degree_d = 1);

struct IndexResult {
    Rat value;
    bool degenerate = false;  // string body dimension below the variety dimension
    bool exact = true;
};

// [L,...,L] = (n! d / s_tilde) Vol_n(delta_tilde)
IndexResult self_intersection_index(const AlgebraView& view);

// n! V(conv I_1, ..., conv I_n), or n! I(...) when a form is supplied.
Rat bernstein_mixed_index(const std::vector<ToricSubspaceSpec>& specs,
                          const std::optional<geom::LinearFormProduct>& f = std::nullopt);

struct GrowthTriple {
    Rat vol_string;   // Vol_q(delta_tilde) w.r.t. its own lattice
    Rat int_hat;      // integral of the pulled-back f over delta_hat
    Rat int_dh;       // integral of f against the DH measure (cell partition)
    Rat vol_hat;      // Vol_{p_hat}(delta_hat)
    Rat empirical;    // H(k)/k^q at k = empirical_k
    Rat mult_growth;  // M(k)/k^{p_hat}
    long empirical_k = 0;
    int q = 0, p_hat = 0;
    bool exact = true;
};

GrowthTriple growth_crosscheck(const AlgebraView& view, long k_probe = 20);

struct AlgebraDhReport {
    std::vector<dh::CompareReport> comparisons;
    std::vector<dh::FujitaStep> fujita;
    Rat vol_hat;  // exact total mass
};

AlgebraDhReport algebra_dh(const AlgebraView& view, const std::vector<long>& k_list,
                           const std::vector<int>& grid_shape, bool with_fujita = false);

struct BmFailure {
    Vec mu_a, mu_b;
    Rat fa, fb, fc;
};

struct BmReport {
    int exponent = 0;   // e = p_hat - p of the product view
    long checked = 0;
    std::vector<BmFailure> failures;
    bool holds() const { return failures.empty(); }
};

// Brunn-Minkowski inequality for the DH densities of a, b and their product,
// with the fiber-dimension exponent, on interior grid points.
BmReport brunn_minkowski_check(const AlgebraView& a, const AlgebraView& b,
                               const AlgebraView& prod, int grid_per_axis);

}  // namespace okb::galg

#endif
