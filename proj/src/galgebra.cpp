#include "okb/galgebra.hpp"

#include <algorithm>
#include <numeric>

#include "okb/errors.hpp"

namespace okb::galg {

namespace {

Int factorial_int(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Rat pow_rat(long base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

LaurentPoly& LaurentPoly::add_term(const sgp::Point& e, const Rat& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(e, c);
        return *this;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
    return *this;
}

bool LaurentPoly::zero() const { return terms.empty(); }

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            sgp::Point e(ea);
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

TermOrderValuation TermOrderValuation::lex(int n) {
    TermOrderValuation v;
    v.var_order.resize(n);
    std::iota(v.var_order.begin(), v.var_order.end(), 0);
    return v;
}

bool TermOrderValuation::exp_less(const sgp::Point& a, const sgp::Point& b) const {
    for (int i : var_order) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

sgp::Point TermOrderValuation::value(const LaurentPoly& f) const {
    if (f.zero()) throw internal_error("valuation of the zero polynomial");
    const sgp::Point* best = nullptr;
    for (const auto& [e, c] : f.terms)
        if (!best || exp_less(e, *best)) best = &e;
    return *best;
}

namespace {

// echelon basis keyed by leading (minimal) exponent; leading coefficients 1
using Echelon = std::map<sgp::Point, LaurentPoly>;

// reduce f against the basis; nonzero remainder has a fresh leading exponent
LaurentPoly reduce_poly(LaurentPoly f, const Echelon& basis, const TermOrderValuation& v) {
    while (!f.zero()) {
        sgp::Point lead = v.value(f);
        auto it = basis.find(lead);
        if (it == basis.end()) return f;
        const Rat c = f.terms.at(lead);
        for (const auto& [e, bc] : it->second.terms) f.add_term(e, -c * bc);
    }
    return f;
}

void insert_poly(LaurentPoly f, Echelon& basis, const TermOrderValuation& v) {
    f = reduce_poly(std::move(f), basis, v);
    if (f.zero()) return;
    sgp::Point lead = v.value(f);
    const Rat c = f.terms.at(lead);
    for (auto& [e, fc] : f.terms) fc /= c;
    basis.emplace(std::move(lead), std::move(f));
}

}  // namespace

std::vector<ValuationLevel> valuation_semigroup(int n, const std::vector<LaurentPoly>& basis,
                                                const TermOrderValuation& v, long K) {
    if (basis.empty()) throw input_error("valuation semigroup: empty spanning set");
    if (K < 1) throw input_error("valuation semigroup: need K >= 1");
    if (K > 16) throw cap_error("valuation semigroup cutoff exceeds the supported cap (16)");
    for (const auto& f : basis) {
        if (f.zero()) throw input_error("valuation semigroup: zero polynomial in the span");
        for (const auto& [e, c] : f.terms)
            if (e.size() != static_cast<size_t>(n))
                throw input_error("valuation semigroup: exponent dimension mismatch");
    }

    Echelon level1;
    for (const auto& f : basis) insert_poly(f, level1, v);

    std::vector<ValuationLevel> out;
    Echelon prev = level1;
    for (long k = 1; k <= K; ++k) {
        if (k > 1) {
            Echelon cur;
            for (const auto& [lp, fp] : prev)
                for (const auto& [l1, f1] : level1) insert_poly(multiply(fp, f1), cur, v);
            prev = std::move(cur);
        }
        ValuationLevel lvl;
        lvl.k = k;
        lvl.dim = static_cast<long long>(prev.size());
        for (const auto& [lead, poly] : prev) lvl.images.push_back(lead);
        std::sort(lvl.images.begin(), lvl.images.end());
        if (static_cast<long long>(lvl.images.size()) != lvl.dim)
            throw internal_error("valuation image count disagrees with the dimension");
        out.push_back(std::move(lvl));
    }
    return out;
}

namespace {

geom::Lattice as_lattice(int ambient, const IMat& rows) {
    geom::Lattice l;
    l.ambient_dim = ambient;
    l.basis = rows;
    return l;
}

// {lambda*} x GC(lambda*) embedded in R^{n+N}
geom::Polytope string_body_over_point(const rep::Weight& lam, const geom::Polytope& gc) {
    std::vector<Vec> pts;
    for (const auto& b : gc.vertices()) {
        Vec v;
        for (long long x : lam) v.push_back(Rat(x));
        v.insert(v.end(), b.begin(), b.end());
        pts.push_back(std::move(v));
    }
    return geom::Polytope::from_points(pts);
}

sgp::Point concat_point(const rep::Weight& a, const std::vector<long long>& b) {
    sgp::Point p(a);
    p.insert(p.end(), b.begin(), b.end());
    return p;
}

}  // namespace

AlgebraView toric_algebra_view(const ToricSubspaceSpec& spec, long cutoff, const Int& degree_d) {
    if (spec.n <= 0) throw input_error("toric view: ambient dimension must be positive");
    AlgebraView view;
    view.weight_dim = spec.n;
    view.hat_dim = spec.n;
    view.variety_dim = spec.n;
    view.degree_d = degree_d;
    view.roots = rep::RootData::torus(spec.n);
    view.f = geom::LinearFormProduct::constant(1, spec.n);
    view.pi_hat = dh::LevelLinearMap::identity(spec.n);

    if (spec.monomial()) {
        std::vector<sgp::Generator> gens;
        for (const auto& e : spec.exponents) gens.push_back({1, e});
        view.kind = "toric-monomial";
        view.s_hat = sgp::Semigroup::from_generators(spec.n, gens);
        view.exact = true;
    } else {
        if (spec.polys.empty()) throw input_error("toric view: empty subspace");
        auto levels = valuation_semigroup(spec.n, spec.polys, TermOrderValuation::lex(spec.n), cutoff);
        std::map<long, std::vector<sgp::Point>> data;
        for (const auto& lvl : levels) data[lvl.k] = lvl.images;
        view.kind = "toric-valuation";
        view.s_hat = sgp::Semigroup::from_levels(spec.n, cutoff, data);
        view.exact = false;
    }

    sgp::SemigroupSummary summary = sgp::analyze(view.s_hat);
    sgp::BodyResult body = sgp::newton_okounkov_body(view.s_hat);
    view.delta = body.body;
    view.delta_hat = body.body;
    view.delta_tilde = body.body;
    view.lambda = as_lattice(spec.n, summary.level_lattice);
    view.lambda_hat = view.lambda;
    view.lambda_tilde = view.lambda;
    view.ind_s = view.ind_s_hat = view.ind_s_tilde = summary.ind;
    view.p = view.p_hat = view.q = std::max(body.body.affine_dim(), 0);

    const sgp::Semigroup s = view.s_hat;
    view.hilbert = [s](long k) { return Int(s.level(k).size()); };
    view.mult_total = view.hilbert;
    return view;
}

AlgebraView flag_algebra_view(int n, const rep::Weight& lambda, bool t_view,
                              const std::vector<long>& level_store, const Int& degree_d) {
    rep::RootData rd = rep::RootData::gl(n);
    rep::require_dominant(rd, lambda);
    const rep::Weight lam_star = rep::dual_weight(rd, lambda);
    const int N = rd.num_positive_roots();
    geom::Polytope gc = rep::gc_polytope(rd, lam_star);

    AlgebraView view;
    view.weight_dim = n;
    view.variety_dim = N;  // dim G/B
    view.degree_d = degree_d;
    view.lambda_star = lam_star;

    // small levels always materialized for lattice analysis
    std::vector<long> store = level_store;
    for (long k : {1L, 2L, 3L}) store.push_back(k);
    std::sort(store.begin(), store.end());
    store.erase(std::unique(store.begin(), store.end()), store.end());
    long store_max = store.back();

    if (!t_view) {
        view.kind = "flag-G";
        view.hat_dim = n;
        sgp::Generator g{1, sgp::Point(lam_star.begin(), lam_star.end())};
        view.s_hat = sgp::Semigroup::from_generators(n, {g});
        view.pi_hat = dh::LevelLinearMap::identity(n);
        Vec lam_vec(n);
        for (int i = 0; i < n; ++i) lam_vec[i] = Rat(lam_star[i]);
        view.delta = geom::Polytope::point(lam_vec);
        view.delta_hat = view.delta;
        view.delta_tilde = string_body_over_point(lam_star, gc);
        view.p = view.p_hat = 0;
        view.q = gc.affine_dim();
        view.lambda = as_lattice(n, {});
        view.lambda_hat = view.lambda;

        // string lattice from the first few levels of the string semigroup
        std::map<long, std::vector<sgp::Point>> tilde_levels;
        for (long k = 1; k <= 3; ++k) {
            std::vector<sgp::Point> pts;
            for (const auto& pat : rep::gc_patterns(rd, rep::scale_weight(lam_star, k)).patterns)
                pts.push_back(concat_point(rep::scale_weight(lam_star, k), pat.free_coords()));
            tilde_levels[k] = std::move(pts);
        }
        sgp::Semigroup s_tilde = sgp::Semigroup::from_levels(n + N, 3, tilde_levels);
        sgp::SemigroupSummary tsum = sgp::analyze(s_tilde);
        view.lambda_tilde = as_lattice(n + N, tsum.level_lattice);
        view.ind_s = view.ind_s_hat = 1;
        view.ind_s_tilde = tsum.ind;

        view.roots = rd;
        view.f = rep::reduced_weyl_polynomial(view.delta, rd);
        view.hilbert = [rd, lam_star](long k) { return rep::weyl_dim(rd, rep::scale_weight(lam_star, k)); };
        view.mult_total = [](long) { return Int(1); };
        return view;
    }

    view.kind = "flag-T";
    view.hat_dim = N;

    // multiplicity semigroup: GC lattice points fibred over the weights
    std::map<long, std::vector<sgp::Point>> hat_levels;
    std::map<long, std::vector<sgp::Point>> weight_levels;
    for (long k : store) {
        std::vector<sgp::Point> pts;
        std::map<sgp::Point, char> weights;
        for (const auto& pat : rep::gc_patterns(rd, rep::scale_weight(lam_star, k)).patterns) {
            pts.push_back(pat.free_coords());
            rep::Weight w = pat.weight(rd);
            weights.emplace(sgp::Point(w.begin(), w.end()), 1);
        }
        hat_levels[k] = std::move(pts);
        std::vector<sgp::Point> ws;
        for (const auto& [w, one] : weights) ws.push_back(w);
        weight_levels[k] = std::move(ws);
    }
    view.s_hat = sgp::Semigroup::from_levels(N, store_max, hat_levels);

    // weight reading as a level map: s_l = sum of the row with l entries;
    // weight_i = s_i - s_{i-1}, with s_n supplied by the level shift
    IMat t(n, IVec(N, 0));
    IVec shift(n, 0);
    auto var_index = [&](int row, int pos) {  // row 1..n-1 (length n-row)
        int off = 0;
        for (int r = 1; r < row; ++r) off += n - r;
        return off + pos;
    };
    for (int i = 1; i <= n; ++i) {
        if (i <= n - 1) {  // +s_i: the row with i entries is row n-i
            for (int pos = 0; pos < i; ++pos) t[i - 1][var_index(n - i, pos)] += 1;
        }
        if (i - 1 >= 1) {  // -s_{i-1}
            for (int pos = 0; pos < i - 1; ++pos) t[i - 1][var_index(n - (i - 1), pos)] -= 1;
        }
    }
    long long lam_sum = 0;
    for (long long x : lam_star) lam_sum += x;
    shift[n - 1] = lam_sum;  // s_n = k * sum(lambda*)
    view.pi_hat = dh::LevelLinearMap::affine(std::move(t), std::move(shift));

    view.delta = rep::weight_polytope(rd, lam_star);
    view.delta_hat = gc;
    view.delta_tilde = gc;  // the torus has no string directions
    view.p = view.delta.affine_dim();
    view.p_hat = view.q = gc.affine_dim();

    sgp::Semigroup s_weights = sgp::Semigroup::from_levels(n, store_max, weight_levels);
    sgp::SemigroupSummary wsum = sgp::analyze(s_weights);
    view.lambda = as_lattice(n, wsum.level_lattice);
    view.ind_s = wsum.ind;
    sgp::SemigroupSummary hsum = sgp::analyze(view.s_hat);
    view.lambda_hat = as_lattice(N, hsum.level_lattice);
    view.lambda_tilde = view.lambda_hat;
    view.ind_s_hat = view.ind_s_tilde = hsum.ind;

    view.roots = rep::RootData::torus(n);
    view.f = geom::LinearFormProduct::constant(1, n);
    view.hilbert = [rd, lam_star](long k) { return rep::weyl_dim(rd, rep::scale_weight(lam_star, k)); };
    view.mult_total = view.hilbert;
    return view;
}

IndexResult self_intersection_index(const AlgebraView& view) {
    IndexResult res;
    res.exact = view.exact;
    if (view.q < view.variety_dim) {
        res.value = 0;
        res.degenerate = true;  // the Kodaira image drops dimension; both sides vanish
        return res;
    }
    Rat vol = normalized_volume(view.delta_tilde,
                                geom::Lattice::standard(view.delta_tilde.ambient_dim()));
    res.value = Rat(factorial_int(view.variety_dim)) * Rat(view.degree_d) * vol / Rat(view.ind_s_tilde);
    return res;
}

Rat bernstein_mixed_index(const std::vector<ToricSubspaceSpec>& specs,
                          const std::optional<geom::LinearFormProduct>& f) {
    if (specs.empty()) throw input_error("bernstein index: no subspaces");
    const int n = specs[0].n;
    if (static_cast<size_t>(n) != specs.size())
        throw input_error("bernstein index: need n subspaces in n variables");
    std::vector<geom::Polytope> bodies;
    for (const auto& spec : specs) {
        if (!spec.monomial())
            throw input_error("bernstein index: only monomial subspaces are supported");
        if (spec.n != n) throw input_error("bernstein index: mixed ambient dimensions");
        std::vector<Vec> pts;
        for (const auto& e : spec.exponents) pts.push_back(sgp::point_to_vec(e));
        bodies.push_back(geom::Polytope::from_points(pts));
    }
    Rat val = f ? geom::mixed_integral(bodies, *f) : geom::mixed_volume(bodies);
    return Rat(factorial_int(n)) * val;
}

namespace {

geom::LinearFormProduct pullback(const geom::LinearFormProduct& f, const dh::LevelLinearMap& t) {
    Mat lin = t.linear_part();
    const int dom = t.domain_dim();
    std::vector<geom::LinearFormProduct::Form> forms;
    for (const auto& fm : f.forms()) {
        Vec coeff(dom, Rat(0));
        for (size_t r = 0; r < lin.size(); ++r) coeff = la::axpy(fm.coeff[r], lin[r], coeff);
        Rat c = fm.constant + la::dot(fm.coeff, to_vec(t.shift));
        forms.push_back({std::move(coeff), c});
    }
    geom::LinearFormProduct out(std::move(forms), f.normalizer());
    if (out.degree() == 0) return geom::LinearFormProduct::constant(out.normalizer(), dom);
    return out;
}

}  // namespace

GrowthTriple growth_crosscheck(const AlgebraView& view, long k_probe) {
    GrowthTriple out;
    out.q = view.q;
    out.p_hat = view.p_hat;
    out.exact = view.exact;

    out.vol_string = normalized_volume(view.delta_tilde, view.lambda_tilde);
    out.vol_hat = normalized_volume(view.delta_hat, view.lambda_hat);

    geom::LinearFormProduct f_hat = pullback(view.f, view.pi_hat);
    out.int_hat = integrate_linear_form_product(view.delta_hat, f_hat, view.lambda_hat);

    if (view.p == 0) {
        out.int_dh = view.f.evaluate(view.delta.vertices()[0]) * out.vol_hat;
    } else {
        // integral against the DH measure through the exact cell partition
        dh::BaseFrame frame = dh::BaseFrame::for_polytope(view.delta);
        dh::Grid grid = dh::Grid::cover(frame, view.delta, std::vector<int>(view.p, 3));
        Rat total = 0;
        for (long long c = 0; c < grid.cell_count(); ++c) {
            Vec cl, ch;
            grid.cell_bounds(c, &cl, &ch);
            geom::Polytope piece = dh::cell_preimage(view.delta_hat, view.pi_hat, frame, cl, ch);
            if (piece.is_empty() || piece.affine_dim() < view.p_hat) continue;
            total += integrate_linear_form_product(piece, f_hat, view.lambda_hat);
        }
        out.int_dh = total;
    }

    long k = std::min(k_probe, view.s_hat.cutoff());
    out.empirical_k = k;
    out.empirical = Rat(view.hilbert(k)) / pow_rat(k, view.q);
    out.mult_growth = Rat(view.mult_total(k)) / pow_rat(k, view.p_hat);
    return out;
}

AlgebraDhReport algebra_dh(const AlgebraView& view, const std::vector<long>& k_list,
                           const std::vector<int>& grid_shape, bool with_fujita) {
    dh::BaseFrame frame = dh::BaseFrame::for_polytope(view.delta);
    if (static_cast<int>(grid_shape.size()) != frame.dim())
        throw input_error("algebra dh: grid shape must match the base dimension " +
                          std::to_string(frame.dim()));
    dh::Grid grid = dh::Grid::cover(frame, view.delta, grid_shape);

    AlgebraDhReport rep;
    rep.vol_hat = normalized_volume(view.delta_hat, view.lambda_hat);
    rep.comparisons = dh::dh_empirical_compare(view.s_hat, view.pi_hat, k_list, frame, grid,
                                               view.delta_hat, view.lambda_hat);
    if (with_fujita)
        rep.fujita = dh::fujita_sequence(view.s_hat, view.pi_hat, k_list, frame, grid,
                                         view.delta_hat, view.lambda_hat);
    return rep;
}

namespace {

// exact check of a^{1/e} + b^{1/e} <= c^{1/e} for non-negative rationals
bool root_sum_leq(const Rat& a, const Rat& b, const Rat& c, int e) {
    if (a < 0 || b < 0 || c < 0) throw internal_error("negative density");
    if (e == 1) return a + b <= c;
    if (a == 0) return b <= c;
    if (b == 0) return a <= c;
    if (e == 2) {
        const Rat rest = c - a - b;
        if (rest < 0) return false;
        return 4 * a * b <= rest * rest;
    }
    // interval refinement with exact integer e-th roots
    Int d = Int(1) << 20;
    const Int d_cap = Int(1) << 100;
    while (d <= d_cap) {
        auto lower = [&](const Rat& x) {
            Rat scaled = x * Rat(boost::multiprecision::pow(d, static_cast<unsigned>(e)));
            return iroot(floor_rat(scaled), static_cast<unsigned>(e));
        };
        Int la_ = lower(a), lb = lower(b), lc = lower(c);
        if (la_ + lb + 2 <= lc) return true;
        if (la_ + lb > lc + 1) return false;
        d <<= 16;
    }
    return true;  // indistinguishable from equality at 100 bits
}

std::vector<Vec> interior_grid_points(const AlgebraView& view, int g) {
    dh::BaseFrame frame = dh::BaseFrame::for_polytope(view.delta);
    if (frame.dim() == 0) return {view.delta.vertices()[0]};
    dh::Grid grid = dh::Grid::cover(frame, view.delta, std::vector<int>(frame.dim(), g));
    std::vector<Vec> pts;
    for (long long c = 0; c < grid.cell_count(); ++c) {
        Vec y = frame.to_y(grid.cell_center(c));
        bool interior = true;
        for (const auto& fct : view.delta.facets())
            if (la::dot(fct.normal, y) >= fct.offset) {
                interior = false;
                break;
            }
        for (const auto& eq : view.delta.equalities())
            if (la::dot(eq.normal, y) != eq.offset) {
                interior = false;
                break;
            }
        if (interior) pts.push_back(std::move(y));
    }
    return pts;
}

}  // namespace

BmReport brunn_minkowski_check(const AlgebraView& a, const AlgebraView& b,
                               const AlgebraView& prod, int grid_per_axis) {
    BmReport rep;
    rep.exponent = prod.p_hat - prod.p;
    if (rep.exponent < 0) throw internal_error("negative fiber dimension");

    auto density = [&](const AlgebraView& v, const Vec& mu) {
        return dh::dh_density_at(v.delta_hat, v.pi_hat, mu, rep.exponent);
    };

    std::vector<Vec> pa = interior_grid_points(a, grid_per_axis);
    std::vector<Vec> pb = interior_grid_points(b, grid_per_axis);
    std::vector<Rat> fa(pa.size()), fb(pb.size());
    for (size_t i = 0; i < pa.size(); ++i) fa[i] = density(a, pa[i]);
    for (size_t i = 0; i < pb.size(); ++i) fb[i] = density(b, pb[i]);

    std::map<Vec, Rat> prod_cache;
    for (size_t i = 0; i < pa.size(); ++i)
        for (size_t j = 0; j < pb.size(); ++j) {
            Vec sum = la::add(pa[i], pb[j]);
            auto it = prod_cache.find(sum);
            if (it == prod_cache.end()) it = prod_cache.emplace(sum, density(prod, sum)).first;
            const Rat& fc = it->second;
            ++rep.checked;
            bool ok;
            if (rep.exponent == 0)
                ok = !(fa[i] > 0 && fb[j] > 0) || fc > 0;
            else
                ok = root_sum_leq(fa[i], fb[j], fc, rep.exponent);
            if (!ok) rep.failures.push_back({pa[i], pb[j], fa[i], fb[j], fc});
        }
    return rep;
}

}  // namespace okb::galg
