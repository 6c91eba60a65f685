#include "okb/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "okb/errors.hpp"

namespace okb::sgp {

namespace {

constexpr long long kCoordBound = 1LL << 40;

void check_point(const Point& p, int n) {
    if (p.size() != static_cast<size_t>(n))
        throw input_error("semigroup point dimension mismatch");
    for (long long c : p)
        if (c > kCoordBound || c < -kCoordBound)
            throw input_error("semigroup coordinate exceeds the supported range");
}

std::vector<Point> sumset(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            Point s(x);
            for (size_t i = 0; i < y.size(); ++i) s[i] += y[i];
            out.push_back(std::move(s));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Vec point_to_vec(const Point& p) {
    Vec v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = Rat(p[i]);
    return v;
}

Semigroup Semigroup::from_generators(int n, std::vector<Generator> gens) {
    if (n <= 0) throw input_error("semigroup: ambient dimension must be positive");
    if (gens.empty()) throw input_error("semigroup: no generators");
    for (const auto& g : gens) {
        if (g.level < 1) throw input_error("semigroup generators must have positive level");
        check_point(g.point, n);
    }
    Semigroup s;
    s.kind_ = Kind::Generators;
    s.n_ = n;
    s.gens_ = std::move(gens);
    s.k_max_ = caps().max_level;
    return s;
}

Semigroup Semigroup::from_levels(int n, long k_max, std::map<long, std::vector<Point>> levels) {
    if (n <= 0) throw input_error("semigroup: ambient dimension must be positive");
    if (k_max < 1) throw input_error("semigroup oracle: cutoff must be at least 1");
    Semigroup s;
    s.kind_ = Kind::Provided;
    s.n_ = n;
    s.k_max_ = k_max;
    for (auto& [k, pts] : levels) {
        if (k < 1 || k > k_max) throw input_error("semigroup oracle: level outside [1, k_max]");
        for (auto& p : pts) check_point(p, n);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        s.provided_[k] = std::move(pts);
    }
    // additivity on materialized levels
    for (const auto& [k, pk] : s.provided_)
        for (const auto& [l, pl] : s.provided_) {
            if (k + l > k_max || !s.provided_.count(k + l)) continue;
            const auto& target = s.provided_.at(k + l);
            for (const auto& sp : sumset(pk, pl))
                if (!std::binary_search(target.begin(), target.end(), sp))
                    throw input_error("semigroup oracle violates additivity between levels " +
                                      std::to_string(k) + " and " + std::to_string(l));
        }
    return s;
}

Semigroup Semigroup::levelwise_sum(const Semigroup& a, const Semigroup& b) {
    if (a.n_ != b.n_) throw input_error("levelwise sum: ambient dimension mismatch");
    Semigroup s;
    s.kind_ = Kind::Sum;
    s.n_ = a.n_;
    s.k_max_ = std::min(a.cutoff(), b.cutoff());
    s.left_ = std::make_shared<Semigroup>(a);
    s.right_ = std::make_shared<Semigroup>(b);
    return s;
}

long Semigroup::cutoff() const { return k_max_; }

void Semigroup::scan(long K, const std::function<void(long, const std::vector<Point>&)>& sink) const {
    if (K > cutoff()) throw cap_error("level " + std::to_string(K) + " exceeds the cutoff");
    switch (kind_) {
        case Kind::Provided: {
            static const std::vector<Point> kEmpty;
            for (long k = 1; k <= K; ++k) {
                auto it = provided_.find(k);
                sink(k, it == provided_.end() ? kEmpty : it->second);
            }
            return;
        }
        case Kind::Sum: {
            for (long k = 1; k <= K; ++k) {
                auto la = left_->level(k), lb = right_->level(k);
                if (la.empty() || lb.empty()) {
                    sink(k, {});
                } else {
                    sink(k, sumset(la, lb));
                }
            }
            return;
        }
        case Kind::Generators:
            break;
    }
    // dynamic programming window: S_k = union over generators g of S_{k-level(g)} + g
    long window = 1;
    for (const auto& g : gens_) window = std::max(window, g.level);
    std::vector<std::vector<Point>> ring(window + 1);
    std::vector<Point> zero_level = {Point(n_, 0)};
    auto level_at = [&](long k) -> const std::vector<Point>& {
        static const std::vector<Point> kEmpty;
        if (k < 0) return kEmpty;
        if (k == 0) return zero_level;
        return ring[k % (window + 1)];
    };
    for (long k = 1; k <= K; ++k) {
        std::vector<Point> cur;
        for (const auto& g : gens_) {
            if (g.level > k) continue;
            for (const auto& base : level_at(k - g.level)) {
                Point p(base);
                for (int i = 0; i < n_; ++i) p[i] += g.point[i];
                cur.push_back(std::move(p));
            }
        }
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
        ring[k % (window + 1)] = std::move(cur);
        sink(k, ring[k % (window + 1)]);
    }
}

std::vector<Point> Semigroup::level(long k) const {
    if (k == 0) return {Point(n_, 0)};
    std::vector<Point> out;
    scan(k, [&](long kk, const std::vector<Point>& pts) {
        if (kk == k) out = pts;
    });
    return out;
}

std::vector<long long> Semigroup::hilbert(long K) const {
    std::vector<long long> h(K + 1, 0);
    h[0] = 1;
    scan(K, [&](long k, const std::vector<Point>& pts) { h[k] = static_cast<long long>(pts.size()); });
    return h;
}

long Semigroup::level_gcd(long probe_up_to) const {
    if (kind_ == Kind::Generators) {
        long g = 0;
        for (const auto& gen : gens_) g = std::gcd(g, gen.level);
        return g;
    }
    long g = 0;
    long lim = std::min(probe_up_to, cutoff());
    scan(lim, [&](long k, const std::vector<Point>& pts) {
        if (!pts.empty()) g = std::gcd(g, k);
    });
    return g == 0 ? 1 : g;
}

namespace {

// collects the raw (level, point) vectors that generate G(S) and C(S)
std::vector<IVec> spanning_points(const Semigroup& s, bool* cutoff_limited) {
    std::vector<IVec> pts;
    if (s.finitely_generated()) {
        *cutoff_limited = false;
        for (const auto& g : s.generators()) {
            IVec v(s.ambient_n() + 1);
            v[0] = g.level;
            for (int i = 0; i < s.ambient_n(); ++i) v[i + 1] = g.point[i];
            pts.push_back(std::move(v));
        }
    } else {
        *cutoff_limited = true;
        long lim = std::min(s.cutoff(), 32L);
        s.scan(lim, [&](long k, const std::vector<Point>& level) {
            for (const auto& p : level) {
                IVec v(s.ambient_n() + 1);
                v[0] = k;
                for (int i = 0; i < s.ambient_n(); ++i) v[i + 1] = p[i];
                pts.push_back(std::move(v));
            }
        });
        if (pts.empty()) throw input_error("semigroup oracle has no points below the cutoff");
    }
    return pts;
}

}  // namespace

SemigroupSummary analyze(const Semigroup& s) {
    SemigroupSummary out;
    out.m = s.level_gcd();
    if (out.m != 1)
        throw assumption_error("semigroup has level gcd m(S) = " + std::to_string(out.m) +
                               "; only m(S) = 1 is supported");
    std::vector<IVec> pts = spanning_points(s, &out.cutoff_limited);
    const int n = s.ambient_n();

    out.group_basis = la::hermite_normal_form(pts);
    out.span_dim = static_cast<int>(out.group_basis.size());

    {
        std::vector<IVec> rays = pts;
        for (auto& r : rays) r = la::primitive(to_vec(r));
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        out.cone_rays = std::move(rays);
    }

    // Λ(S) = level-0 part of G(S)
    if (!out.group_basis.empty()) {
        IMat level_row(1, IVec(out.group_basis.size()));
        for (size_t j = 0; j < out.group_basis.size(); ++j) level_row[0][j] = out.group_basis[j][0];
        IMat combos = la::integer_kernel(level_row);
        IMat lambda;
        for (const auto& c : combos) {
            IVec v(n, 0);
            for (size_t j = 0; j < c.size(); ++j)
                for (int i = 0; i < n; ++i) v[i] += c[j] * out.group_basis[j][i + 1];
            lambda.push_back(std::move(v));
        }
        out.level_lattice = la::hermite_normal_form(lambda);
    }

    // ind(S): index inside the saturation Z^n ∩ span
    if (out.level_lattice.empty()) {
        out.ind = 1;
    } else {
        Mat rows;
        for (const auto& r : out.level_lattice) rows.push_back(to_vec(r));
        Mat normals = la::kernel(rows);
        IMat sat;
        if (normals.empty()) {
            sat = geom::Lattice::standard(n).basis;
        } else {
            IMat nmat;
            for (const auto& u : normals) nmat.push_back(la::primitive(u));
            sat = la::integer_kernel(nmat);
        }
        out.ind = la::lattice_index(out.level_lattice, sat);
    }

    // every finite-generator semigroup with positive levels is strongly
    // non-negative; oracle specs are reported up to cutoff
    out.strongly_nonneg = true;
    return out;
}

BodyResult newton_okounkov_body(const Semigroup& s) {
    std::vector<Vec> pts;
    if (s.finitely_generated()) {
        for (const auto& g : s.generators()) {
            Vec v = point_to_vec(g.point);
            for (auto& c : v) c /= g.level;
            pts.push_back(std::move(v));
        }
        return {geom::Polytope::from_points(pts), true};
    }
    s.scan(s.cutoff(), [&](long k, const std::vector<Point>& level) {
        for (const auto& p : level) {
            Vec v = point_to_vec(p);
            for (auto& c : v) c /= k;
            pts.push_back(std::move(v));
        }
    });
    if (pts.empty()) throw input_error("semigroup has no points below the cutoff");
    return {geom::Polytope::from_points(pts), false};
}

Vec centroid(const geom::Polytope& p) {
    if (p.is_empty()) throw input_error("centroid of the empty polytope");
    if (p.affine_dim() == 0) return p.vertices()[0];
    const int n = p.ambient_dim();
    const geom::Lattice std_lat = geom::Lattice::standard(n);
    Rat vol = normalized_volume(p, std_lat);
    Vec c(n);
    for (int i = 0; i < n; ++i) {
        Vec coeff(n, Rat(0));
        coeff[i] = 1;
        geom::LinearFormProduct coord({{coeff, Rat(0)}}, 1);
        c[i] = integrate_linear_form_product(p, coord, std_lat) / vol;
    }
    return c;
}

RegScanReport regularization_scan(const Semigroup& s, const Rat& theta, long K) {
    if (theta <= 0 || theta >= 1)
        throw input_error("shrink factor must lie strictly between 0 and 1");
    SemigroupSummary sum = analyze(s);
    BodyResult body = newton_okounkov_body(s);
    const int n = s.ambient_n();

    RegScanReport report;
    report.body = body.body;
    report.shrunk_body = body.body.shrink_toward(centroid(body.body), theta);

    geom::Lattice lambda;
    lambda.ambient_dim = n;
    lambda.basis = sum.level_lattice;

    // extended-gcd style search for a group point at each level residue
    const auto& gb = sum.group_basis;

    std::vector<std::vector<Point>> levels(K + 1);
    s.scan(K, [&](long k, const std::vector<Point>& pts) { levels[k] = pts; });

    for (long k = 1; k <= K; ++k) {
        // particular element of G(S) at level k: integer solve on the HNF basis
        Mat rows(1, Vec(gb.size()));
        for (size_t j = 0; j < gb.size(); ++j) rows[0][j] = Rat(gb[j][0]);
        auto combo = la::solve(rows, Vec{Rat(k)});
        bool integral = combo.has_value();
        if (combo)
            for (const auto& c : *combo) integral = integral && is_integral(c);
        if (!integral) continue;  // level not hit by the group (m>1 is gated earlier)
        Vec offset(n, Rat(0));
        for (size_t j = 0; j < gb.size(); ++j)
            for (int i = 0; i < n; ++i) offset[i] += (*combo)[j] * Rat(gb[j][i + 1]);

        geom::Polytope scaled = report.body.dilate(Rat(k));
        auto reg_pts = lattice_points(scaled, lambda, offset);
        geom::Polytope shrunk_scaled = report.shrunk_body.dilate(Rat(k));

        RegLevelReport lvl;
        lvl.k = k;
        const auto& sk = levels[k];
        for (const auto& rp : reg_pts) {
            Point ip(n);
            for (int i = 0; i < n; ++i) ip[i] = static_cast<long long>(to_int(rp[i]));
            if (!std::binary_search(sk.begin(), sk.end(), ip)) {
                lvl.gaps.push_back(ip);
                if (shrunk_scaled.contains(rp)) lvl.gaps_in_shrunk.push_back(ip);
            }
        }
        if (!lvl.gaps_in_shrunk.empty()) report.empirical_n = k;
        report.levels.push_back(std::move(lvl));
    }
    return report;
}

GrowthReport growth_check(const Semigroup& s, const geom::LinearFormProduct& f, long K) {
    SemigroupSummary sum = analyze(s);
    BodyResult body = newton_okounkov_body(s);

    GrowthReport rep;
    rep.k = K;
    rep.q = std::max(body.body.affine_dim(), 0);
    rep.degree = f.degree();

    Rat total = 0;
    long long count = 0;
    s.scan(K, [&](long k, const std::vector<Point>& pts) {
        if (k != K) return;
        count = static_cast<long long>(pts.size());
        for (const auto& p : pts) total += f.evaluate(point_to_vec(p));
    });
    rep.count_at_k = count;
    Rat kpow = 1;
    for (int i = 0; i < rep.q + rep.degree; ++i) kpow *= K;
    rep.empirical_ratio = total / kpow;

    const geom::Lattice std_lat = geom::Lattice::standard(s.ambient_n());
    rep.exact_limit =
        integrate_linear_form_product(body.body, f.top_homogeneous(), std_lat) / Rat(sum.ind);
    return rep;
}

}  // namespace okb::sgp
