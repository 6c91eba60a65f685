#include "okb/measures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "okb/errors.hpp"

namespace okb::dh {

namespace {

long long to_ll(const Int& v) {
    if (v > (1LL << 62) || v < -(1LL << 62))
        throw cap_error("mapped coordinate exceeds the supported range");
    return static_cast<long long>(v);
}

Rat pow_rat(long base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

LevelLinearMap LevelLinearMap::linear(IMat t) {
    LevelLinearMap m;
    m.shift.assign(t.size(), 0);
    m.t = std::move(t);
    return m;
}

LevelLinearMap LevelLinearMap::affine(IMat t, IVec shift) {
    if (shift.size() != t.size()) throw input_error("level map: shift dimension mismatch");
    LevelLinearMap m;
    m.t = std::move(t);
    m.shift = std::move(shift);
    return m;
}

LevelLinearMap LevelLinearMap::identity(int n) {
    IMat t(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) t[i][i] = 1;
    return linear(std::move(t));
}

sgp::Point LevelLinearMap::apply(long k, const sgp::Point& x) const {
    sgp::Point y(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
        Int v = shift[j] * k;
        for (size_t i = 0; i < t[j].size(); ++i) v += t[j][i] * x[i];
        y[j] = to_ll(v);
    }
    return y;
}

Vec LevelLinearMap::apply_level1(const Vec& x) const {
    Vec y(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
        Rat v(shift[j]);
        for (size_t i = 0; i < t[j].size(); ++i) v += Rat(t[j][i]) * x[i];
        y[j] = v;
    }
    return y;
}

Mat LevelLinearMap::linear_part() const {
    Mat m(t.size());
    for (size_t i = 0; i < t.size(); ++i) m[i] = to_vec(t[i]);
    return m;
}

Rat DiscreteMeasure::total_mass() const {
    Rat s = 0;
    for (const auto& [pos, mass] : atoms) s += mass;
    return s;
}

BaseFrame BaseFrame::standard(int m) {
    BaseFrame f;
    f.origin.assign(m, Rat(0));
    f.frame.assign(m, Vec(m, Rat(0)));
    for (int i = 0; i < m; ++i) f.frame[i][i] = 1;
    f.dual = f.frame;
    return f;
}

BaseFrame BaseFrame::for_polytope(const geom::Polytope& base) {
    if (base.is_empty()) throw input_error("frame for an empty base");
    BaseFrame f;
    f.origin = base.vertices()[0];
    f.frame = base.span_basis();
    Mat gram = la::mat_mul(f.frame, la::transpose(f.frame));
    const size_t d = f.frame.size();
    f.dual.assign(d, Vec(base.ambient_dim(), Rat(0)));
    for (size_t j = 0; j < d; ++j) {
        Vec e(d, Rat(0));
        e[j] = 1;
        auto col = la::solve(gram, e);
        if (!col) throw internal_error("frame: singular Gram matrix");
        for (size_t k = 0; k < d; ++k) f.dual[j] = la::axpy((*col)[k], f.frame[k], f.dual[j]);
    }
    return f;
}

Vec BaseFrame::to_u(const Vec& y) const { return la::mat_vec(dual, la::sub(y, origin)); }

Vec BaseFrame::to_y(const Vec& u) const {
    Vec y = origin;
    for (size_t i = 0; i < frame.size(); ++i) y = la::axpy(u[i], frame[i], y);
    return y;
}

Grid Grid::cover(const BaseFrame& frame, const geom::Polytope& base, std::vector<int> shape) {
    if (static_cast<int>(shape.size()) != frame.dim())
        throw input_error("grid shape must match the frame dimension");
    for (int s : shape)
        if (s < 1) throw input_error("grid shape entries must be positive");
    Grid g;
    g.shape = std::move(shape);
    bool first = true;
    for (const auto& v : base.vertices()) {
        Vec u = frame.to_u(v);
        if (first) {
            g.lo = u;
            g.hi = u;
            first = false;
            continue;
        }
        for (size_t i = 0; i < u.size(); ++i) {
            g.lo[i] = std::min(g.lo[i], u[i]);
            g.hi[i] = std::max(g.hi[i], u[i]);
        }
    }
    for (size_t i = 0; i < g.lo.size(); ++i)
        if (g.lo[i] == g.hi[i]) g.hi[i] = g.lo[i] + 1;  // degenerate axis: unit width
    return g;
}

long long Grid::cell_count() const {
    long long c = 1;
    for (int s : shape) c *= s;
    return c;
}

void Grid::cell_bounds(long long index, Vec* cl, Vec* ch) const {
    cl->resize(shape.size());
    ch->resize(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
        long long q = index % shape[i];
        index /= shape[i];
        Rat step = (hi[i] - lo[i]) / shape[i];
        (*cl)[i] = lo[i] + step * static_cast<long>(q);
        (*ch)[i] = lo[i] + step * static_cast<long>(q + 1);
    }
}

Vec Grid::cell_center(long long index) const {
    Vec cl, ch;
    cell_bounds(index, &cl, &ch);
    Vec c(cl.size());
    for (size_t i = 0; i < cl.size(); ++i) c[i] = (cl[i] + ch[i]) / 2;
    return c;
}

long long Grid::locate(const Vec& u) const {
    long long idx = 0, mult = 1;
    for (size_t i = 0; i < shape.size(); ++i) {
        if (u[i] < lo[i] || u[i] > hi[i]) return -1;
        Rat step = (hi[i] - lo[i]) / shape[i];
        Int q = floor_rat((u[i] - lo[i]) / step);
        if (q >= shape[i]) q = shape[i] - 1;  // top boundary joins the last cell
        idx += static_cast<long long>(q) * mult;
        mult *= shape[i];
    }
    return idx;
}

DiscreteMeasure multiplicity_measure(const sgp::Semigroup& s_prime, const LevelLinearMap& t,
                                     long k) {
    if (t.domain_dim() != s_prime.ambient_n())
        throw input_error("multiplicity measure: map domain mismatch");
    DiscreteMeasure mu;
    mu.k = k;
    std::map<sgp::Point, long long> counts;
    for (const auto& x : s_prime.level(k)) ++counts[t.apply(k, x)];
    for (const auto& [y, c] : counts) {
        Vec pos = sgp::point_to_vec(y);
        for (auto& p : pos) p /= k;
        mu.atoms.emplace_back(std::move(pos), Rat(c));
    }
    return mu;
}

Rat dh_density_at(const geom::Polytope& delta_prime, const LevelLinearMap& t, const Vec& y,
                  int fiber_dim) {
    Vec target = la::sub(y, to_vec(t.shift));
    auto sl = geom::slice(delta_prime, t.linear_part(), target);
    if (sl.fiber.is_empty() || sl.fiber.affine_dim() < fiber_dim) return 0;
    if (sl.fiber.affine_dim() > fiber_dim)
        throw internal_error("fiber dimension exceeds the declared generic dimension");
    return normalized_volume(sl.fiber, geom::Lattice::standard(sl.fiber.ambient_dim()));
}

std::vector<Rat> dh_exact_density(const geom::Polytope& delta_prime, const LevelLinearMap& t,
                                  const std::vector<Vec>& base_points) {
    // generic fiber dimension: dim Delta' - dim T(Delta')
    std::vector<Vec> images;
    for (const auto& v : delta_prime.vertices()) images.push_back(t.apply_level1(v));
    geom::Polytope image = geom::Polytope::from_points(images);
    int fiber_dim = delta_prime.affine_dim() - image.affine_dim();
    std::vector<Rat> out;
    out.reserve(base_points.size());
    for (const auto& y : base_points) out.push_back(dh_density_at(delta_prime, t, y, fiber_dim));
    return out;
}

geom::Polytope cell_preimage(const geom::Polytope& body, const LevelLinearMap& t,
                             const BaseFrame& frame, const Vec& cell_lo, const Vec& cell_hi) {
    if (body.is_empty()) return body;
    const int n = body.ambient_dim();
    std::vector<geom::HalfSpace> ineqs(body.facets());
    std::vector<geom::Hyperplane> eqs(body.equalities());
    Mat lin = t.linear_part();
    Vec shift = to_vec(t.shift);
    for (int i = 0; i < frame.dim(); ++i) {
        // u_i = <dual_i, T x + shift - origin>
        Vec w(n, Rat(0));
        for (size_t r = 0; r < lin.size(); ++r) w = la::axpy(frame.dual[i][r], lin[r], w);
        Rat c0 = la::dot(frame.dual[i], la::sub(shift, frame.origin));
        ineqs.push_back({w, cell_hi[i] - c0});
        Vec wn = la::scale(Rat(-1), w);
        ineqs.push_back({std::move(wn), c0 - cell_lo[i]});
    }
    return geom::Polytope::from_hrep(n, ineqs, eqs);
}

Rat exact_cell_mass(const geom::Polytope& body, const LevelLinearMap& t, const BaseFrame& frame,
                    const Vec& cell_lo, const Vec& cell_hi, const geom::Lattice& lambda) {
    geom::Polytope piece = cell_preimage(body, t, frame, cell_lo, cell_hi);
    if (piece.is_empty() || piece.affine_dim() < body.affine_dim()) return 0;
    return normalized_volume(piece, lambda);
}

std::vector<CompareReport> dh_empirical_compare(const sgp::Semigroup& s_prime,
                                                const LevelLinearMap& t,
                                                const std::vector<long>& k_list,
                                                const BaseFrame& frame, const Grid& grid) {
    if (!s_prime.finitely_generated())
        throw input_error("empirical comparison needs a finite-generator semigroup");
    sgp::SemigroupSummary summary = sgp::analyze(s_prime);
    sgp::BodyResult body = sgp::newton_okounkov_body(s_prime);
    geom::Lattice lambda{s_prime.ambient_n(), summary.level_lattice};
    return dh_empirical_compare(s_prime, t, k_list, frame, grid, body.body, lambda);
}

std::vector<CompareReport> dh_empirical_compare(const sgp::Semigroup& s_prime,
                                                const LevelLinearMap& t,
                                                const std::vector<long>& k_list,
                                                const BaseFrame& frame, const Grid& grid,
                                                const geom::Polytope& body,
                                                const geom::Lattice& lambda) {
    const int qp = std::max(body.affine_dim(), 0);

    // exact cell masses are shared across all k
    const long long nc = grid.cell_count();
    std::vector<Rat> exact(nc);
    Rat exact_total = 0;
    for (long long c = 0; c < nc; ++c) {
        Vec cl, ch;
        grid.cell_bounds(c, &cl, &ch);
        exact[c] = exact_cell_mass(body, t, frame, cl, ch, lambda);
        exact_total += exact[c];
    }

    std::vector<CompareReport> out;
    for (long k : k_list) {
        DiscreteMeasure mu = multiplicity_measure(s_prime, t, k);
        std::vector<Rat> emp(nc, Rat(0));
        Rat outside = 0;
        const Rat scale = Rat(1) / pow_rat(k, qp);
        for (const auto& [pos, mass] : mu.atoms) {
            long long c = grid.locate(frame.to_u(pos));
            if (c < 0)
                outside += mass * scale;
            else
                emp[c] += mass * scale;
        }
        CompareReport rep;
        rep.k = k;
        rep.l1_distance = outside;
        rep.empirical_total = mu.total_mass() * scale;
        rep.exact_total = exact_total;
        for (long long c = 0; c < nc; ++c) {
            Rat d = emp[c] - exact[c];
            if (d < 0) d = -d;
            rep.l1_distance += d;
            rep.cells.push_back(
                {grid.cell_center(c), frame.to_y(grid.cell_center(c)), exact[c], emp[c]});
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<FujitaStep> fujita_sequence(const sgp::Semigroup& s_prime, const LevelLinearMap& t,
                                        const std::vector<long>& k_list, const BaseFrame& frame,
                                        const Grid& grid) {
    sgp::SemigroupSummary summary = sgp::analyze(s_prime);
    sgp::BodyResult limit_body = sgp::newton_okounkov_body(s_prime);
    geom::Lattice lambda{s_prime.ambient_n(), summary.level_lattice};
    return fujita_sequence(s_prime, t, k_list, frame, grid, limit_body.body, lambda);
}

std::vector<FujitaStep> fujita_sequence(const sgp::Semigroup& s_prime, const LevelLinearMap& t,
                                        const std::vector<long>& k_list, const BaseFrame& frame,
                                        const Grid& grid, const geom::Polytope& body,
                                        const geom::Lattice& lambda) {
    const int qp = std::max(body.affine_dim(), 0);

    const long long nc = grid.cell_count();
    std::vector<Rat> limit_mass(nc);
    for (long long c = 0; c < nc; ++c) {
        Vec cl, ch;
        grid.cell_bounds(c, &cl, &ch);
        limit_mass[c] = exact_cell_mass(body, t, frame, cl, ch, lambda);
    }

    std::vector<FujitaStep> out;
    for (long k : k_list) {
        auto pts = s_prime.level(k);
        if (pts.empty()) throw input_error("fujita: empty level " + std::to_string(k));
        // subsemigroup generated by level k, regraded to level 1
        std::vector<sgp::Generator> gens;
        for (const auto& p : pts) gens.push_back({1, p});
        sgp::Semigroup sk = sgp::Semigroup::from_generators(s_prime.ambient_n(), gens);
        sgp::SemigroupSummary sk_summary = sgp::analyze(sk);
        geom::Lattice lambda_k{s_prime.ambient_n(), sk_summary.level_lattice};
        geom::Polytope bk = sgp::newton_okounkov_body(sk).body;  // conv(S'_k)

        // the step measure lives at scale k: compare cells scaled by k
        LevelLinearMap tk = t;
        for (auto& sh : tk.shift) sh *= k;
        BaseFrame frame_k = frame;
        frame_k.origin = la::scale(Rat(k), frame.origin);

        FujitaStep step;
        step.k = k;
        step.rescaled_body = bk.dilate(Rat(1, static_cast<unsigned long>(k)));
        const Rat scale = Rat(1) / pow_rat(k, qp);
        step.total_mass = 0;
        step.l1_to_limit = 0;
        for (long long c = 0; c < nc; ++c) {
            Vec cl, ch;
            grid.cell_bounds(c, &cl, &ch);
            Vec kcl = la::scale(Rat(k), cl), kch = la::scale(Rat(k), ch);
            Rat mass = exact_cell_mass(bk, tk, frame_k, kcl, kch, lambda_k) * scale;
            step.total_mass += mass;
            Rat d = mass - limit_mass[c];
            if (d < 0) d = -d;
            step.l1_to_limit += d;
        }
        step.support_gap_max = 0;
        for (const auto& f : body.facets()) {
            Rat gap = f.offset - step.rescaled_body.support(f.normal);
            step.support_gap_max = std::max(step.support_gap_max, gap);
        }
        out.push_back(std::move(step));
    }
    return out;
}

std::string compare_report_csv(const CompareReport& report, const Rat& cell_volume) {
    std::ostringstream os;
    if (report.cells.empty()) return "";
    if (cell_volume <= 0) throw input_error("csv export: cell volume must be positive");
    const size_t m = report.cells[0].center_y.size();
    for (size_t i = 0; i < m; ++i) os << "center_" << (i + 1) << ",";
    os << "exact_density,empirical_density,abs_diff\n";
    for (const auto& row : report.cells) {
        const Rat ex = row.exact_mass / cell_volume;
        const Rat em = row.empirical_mass / cell_volume;
        Rat d = ex - em;
        if (d < 0) d = -d;
        for (size_t i = 0; i < m; ++i) os << rat_to_string(row.center_y[i]) << ",";
        os << rat_to_string(ex) << "," << rat_to_string(em) << "," << rat_to_string(d) << "\n";
    }
    return os.str();
}

}  // namespace okb::dh
