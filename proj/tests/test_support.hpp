#ifndef OKB_TEST_SUPPORT_HPP
#define OKB_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "okb/geometry.hpp"

namespace okb::test {

inline Vec v2(long a, long b) { return {Rat(a), Rat(b)}; }
inline Vec v3(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

inline geom::Polytope unit_square() {
    return geom::Polytope::from_points({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
}

inline geom::Polytope std_triangle() {
    return geom::Polytope::from_points({v2(0, 0), v2(1, 0), v2(0, 1)});
}

inline geom::Polytope unit_cube() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(v3(m & 1, (m >> 1) & 1, (m >> 2) & 1));
    return geom::Polytope::from_points(pts);
}

// shoelace area of a 2-d polytope (independent of the triangulation code)
inline Rat shoelace(const geom::Polytope& p) {
    // order the vertices around the vertex average by exact halfplane sweep:
    // collect, then sort by angle via cross products against the first ray
    std::vector<Vec> vs = p.vertices();
    Vec c(2, Rat(0));
    for (const auto& v : vs) c = la::add(c, v);
    c = la::scale(Rat(1, static_cast<unsigned>(vs.size())), c);
    auto half = [&](const Vec& v) {  // 0 for upper halfplane, 1 for lower
        Rat dy = v[1] - c[1], dx = v[0] - c[0];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(vs.begin(), vs.end(), [&](const Vec& a, const Vec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > 0;
    });
    Rat s = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        const Vec& a = vs[i];
        const Vec& b = vs[(i + 1) % vs.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    if (s < 0) s = -s;
    return s / 2;
}

// exact check of a^{1/n} + b^{1/n} <= c^{1/n} for nonnegative rationals
inline bool root_sum_leq(const Rat& a, const Rat& b, const Rat& c, unsigned n) {
    if (n == 1) return a + b <= c;
    if (a == 0) return b <= c;
    if (b == 0) return a <= c;
    Int d = Int(1) << 24;
    const Int d_cap = Int(1) << 120;
    while (d <= d_cap) {
        auto lo = [&](const Rat& x) {
            return iroot(floor_rat(x * Rat(boost::multiprecision::pow(d, n))), n);
        };
        Int la_ = lo(a), lb = lo(b), lc = lo(c);
        if (la_ + lb + 2 <= lc) return true;
        if (la_ + lb > lc + 1) return false;
        d <<= 24;
    }
    return true;  // equality within 120 bits
}

// random full-dimensional polytope with small integer coordinates
inline geom::Polytope random_polytope(std::mt19937& rng, int dim, int npts, int coord_range) {
    std::uniform_int_distribution<int> d(-coord_range, coord_range);
    while (true) {
        std::vector<Vec> pts;
        for (int i = 0; i < npts; ++i) {
            Vec v(dim);
            for (int j = 0; j < dim; ++j) v[j] = Rat(d(rng));
            pts.push_back(std::move(v));
        }
        geom::Polytope p = geom::Polytope::from_points(pts);
        if (p.affine_dim() == dim) return p;
    }
}

// dense polynomial helpers over Rat (for the Fubini interpolation oracle)
using Poly = std::vector<Rat>;  // coefficients, low degree first

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Rat poly_integral(const Poly& p, const Rat& a, const Rat& b) {
    Rat s = 0, pa = a, pb = b;
    for (size_t i = 0; i < p.size(); ++i) {
        s += p[i] * (pb - pa) / Rat(static_cast<unsigned>(i + 1));
        pa *= a;
        pb *= b;
    }
    return s;
}

// Lagrange interpolation through (xs, ys); exact for deg <= xs.size()-1
inline Poly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    Poly out(1, Rat(0));
    out.resize(xs.size(), Rat(0));
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly term{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = poly_mul(term, Poly{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        for (size_t k = 0; k < term.size(); ++k) out[k] += ys[i] * term[k] / denom;
    }
    return out;
}

}  // namespace okb::test

#endif
