#include "okb/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "okb/errors.hpp"

namespace okb::geom {

namespace {

// small fixed-capacity bitset over constraint indices
struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t n) : w((n + 63) / 64, 0) {}
    void set(size_t i) { w[i >> 6] |= (uint64_t(1) << (i & 63)); }
    bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(a.w.size() * 64);
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
}

bool bits_subset(const Bits& a, const Bits& b) {  // a ⊆ b
    for (size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] & ~b.w[i]) return false;
    return true;
}

Int idot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Ray {
    IVec dir;
    Bits tight;
};

constexpr size_t kMaxIntermediateRays = 200000;

}  // namespace

std::vector<IVec> dd_extreme_rays(const Mat& rows) {
    const size_t m = rows.size();
    if (m == 0) throw internal_error("dd_extreme_rays: no constraints");
    const size_t d = rows[0].size();

    std::vector<IVec> a(m);
    for (size_t i = 0; i < m; ++i) a[i] = la::primitive(rows[i]);

    // greedy selection of d independent constraints for the initial simplicial cone
    std::vector<size_t> init;
    Mat acc;
    for (size_t i = 0; i < m && init.size() < d; ++i) {
        acc.push_back(to_vec(a[i]));
        if (la::rank(acc) == acc.size())
            init.push_back(i);
        else
            acc.pop_back();
    }
    if (init.size() < d) throw internal_error("dd_extreme_rays: cone is not pointed");

    // initial rays: columns of A_I^{-1}
    Mat ai(d, Vec(d));
    for (size_t i = 0; i < d; ++i) ai[i] = to_vec(a[init[i]]);
    std::vector<Ray> rays;
    for (size_t j = 0; j < d; ++j) {
        Vec e(d, Rat(0));
        e[j] = 1;
        auto r = la::solve(ai, e);
        if (!r) throw internal_error("dd_extreme_rays: singular initial cone");
        Ray ray{la::primitive(*r), Bits(m)};
        for (size_t i = 0; i < d; ++i)
            if (i != j) ray.tight.set(init[i]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> processed(m, false);
    for (size_t i : init) processed[i] = true;

    for (size_t ci = 0; ci < m; ++ci) {
        if (processed[ci]) continue;
        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = idot(a[ci], rays[r].dir);
            if (val[r] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].tight.set(ci);
            processed[ci] = true;
            continue;
        }
        std::vector<Ray> next;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] < 0) continue;
            Ray kept = rays[r];
            if (val[r] == 0) kept.tight.set(ci);
            next.push_back(std::move(kept));
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (val[n] >= 0) continue;
                Bits common = bits_and(rays[p].tight, rays[n].tight);
                bool adjacent = true;
                for (size_t o = 0; o < rays.size(); ++o) {
                    if (o == p || o == n) continue;
                    if (bits_subset(common, rays[o].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                // val[p]*dir[n] - val[n]*dir[p], tight on the new constraint
                IVec dir(d);
                for (size_t j = 0; j < d; ++j)
                    dir[j] = val[p] * rays[n].dir[j] - val[n] * rays[p].dir[j];
                Vec dirq(d);
                for (size_t j = 0; j < d; ++j) dirq[j] = Rat(dir[j]);
                Ray nr{la::primitive(dirq), std::move(common)};
                nr.tight.set(ci);
                next.push_back(std::move(nr));
                if (next.size() > kMaxIntermediateRays)
                    throw cap_error("double description exceeded the ray cap");
            }
        }
        rays = std::move(next);
        processed[ci] = true;
    }

    std::vector<IVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.dir));
    std::sort(out.begin(), out.end());
    return out;
}

Polytope Polytope::empty(int ambient_dim) {
    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.affine_dim_ = -1;
    return p;
}

Polytope Polytope::point(const Vec& v) { return from_points({v}); }

Polytope Polytope::from_points(const std::vector<Vec>& points) {
    if (points.empty()) throw input_error("hull of an empty point list");
    const size_t n = points[0].size();
    for (const auto& p : points)
        if (p.size() != n) throw input_error("hull: points of mixed dimension");
    Polytope poly;
    poly.ambient_dim_ = static_cast<int>(n);
    poly.derive(points);
    return poly;
}

void Polytope::derive(const std::vector<Vec>& points) {
    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end(),
              [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() > static_cast<size_t>(10 * caps().max_vertices))
        throw cap_error("hull input exceeds the point cap");

    const size_t n = ambient_dim_;
    const Vec& v0 = pts[0];

    Mat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(la::sub(pts[i], v0));
    Mat basis = dirs;
    la::rref(basis);
    while (!basis.empty() && la::is_zero(basis.back())) basis.pop_back();
    span_basis_ = basis;
    affine_dim_ = static_cast<int>(basis.size());
    if (affine_dim_ > caps().max_affine_dim)
        throw cap_error("hull affine dimension exceeds the cap");

    // affine-hull equalities
    equalities_.clear();
    Mat normals = dirs.empty() ? Mat{} : la::kernel(dirs);
    if (dirs.empty()) {  // single point: kernel of nothing = everything
        normals.assign(n, Vec(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) normals[i][i] = 1;
    }
    for (const auto& u : normals) {
        IVec pu = la::primitive(u);
        Vec uu = to_vec(pu);
        equalities_.push_back({uu, la::dot(uu, v0)});
    }
    std::sort(equalities_.begin(), equalities_.end(), [](const Hyperplane& a, const Hyperplane& b) {
        int c = lex_compare(a.normal, b.normal);
        return c != 0 ? c < 0 : a.offset < b.offset;
    });

    if (affine_dim_ == 0) {
        vertices_ = {v0};
        facets_.clear();
        return;
    }

    const size_t q = affine_dim_;
    Mat bt = la::transpose(span_basis_);
    std::vector<Vec> zs(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        auto z = la::solve(bt, la::sub(pts[i], v0));
        if (!z) throw internal_error("hull: point outside its own affine span");
        zs[i] = *z;
    }

    // facets of conv(zs): extreme rays (c0, c) of {(c0,c) : c0 + <c, z_i> >= 0}
    Mat cone_rows(pts.size(), Vec(q + 1));
    for (size_t i = 0; i < pts.size(); ++i) {
        cone_rows[i][0] = 1;
        std::copy(zs[i].begin(), zs[i].end(), cone_rows[i].begin() + 1);
    }
    auto rays = dd_extreme_rays(cone_rows);

    struct ZFacet {
        Vec c;  // inequality c0 + <c, z> >= 0
        Rat c0;
    };
    std::vector<ZFacet> zfacets;
    for (const auto& r : rays) {
        bool c_zero = true;
        for (size_t j = 1; j <= q; ++j)
            if (r[j] != 0) c_zero = false;
        if (c_zero) continue;
        Vec c(q);
        for (size_t j = 0; j < q; ++j) c[j] = Rat(r[j + 1]);
        zfacets.push_back({std::move(c), Rat(r[0])});
    }

    // vertex test: tight facet normals must span the direction space
    vertices_.clear();
    for (size_t i = 0; i < pts.size(); ++i) {
        Mat tight;
        for (const auto& f : zfacets)
            if (f.c0 + la::dot(f.c, zs[i]) == 0) tight.push_back(f.c);
        if (tight.size() >= q && la::rank(tight) == q) vertices_.push_back(pts[i]);
    }
    if (vertices_.size() > static_cast<size_t>(caps().max_vertices))
        throw cap_error("hull vertex count exceeds the cap");

    // pull facets back to ambient coordinates via the dual basis of the span
    Mat gram = la::mat_mul(span_basis_, bt);
    Mat dual(q);
    for (size_t j = 0; j < q; ++j) {
        Vec e(q, Rat(0));
        e[j] = 1;
        auto col = la::solve(gram, e);
        if (!col) throw internal_error("hull: singular Gram matrix");
        Vec dj(n, Rat(0));
        for (size_t k = 0; k < q; ++k) dj = la::axpy((*col)[k], span_basis_[k], dj);
        dual[j] = dj;
    }
    facets_.clear();
    for (const auto& f : zfacets) {
        Vec u(n, Rat(0));
        for (size_t j = 0; j < q; ++j) u = la::axpy(-f.c[j], dual[j], u);
        Rat off = f.c0 + la::dot(u, v0);
        Vec joint(u);
        joint.push_back(off);
        IVec pj = la::primitive(joint);
        Vec normal(pj.size() - 1);
        for (size_t j = 0; j + 1 < pj.size(); ++j) normal[j] = Rat(pj[j]);
        facets_.push_back({std::move(normal), Rat(pj.back())});
    }
    std::sort(facets_.begin(), facets_.end(), [](const HalfSpace& a, const HalfSpace& b) {
        int c = lex_compare(a.normal, b.normal);
        return c != 0 ? c < 0 : a.offset < b.offset;
    });
}

Polytope Polytope::from_hrep(int ambient_dim, const std::vector<HalfSpace>& inequalities,
                             const std::vector<Hyperplane>& equalities) {
    const size_t n = ambient_dim;
    for (const auto& h : inequalities)
        if (h.normal.size() != n) throw input_error("h-rep: inequality dimension mismatch");
    for (const auto& h : equalities)
        if (h.normal.size() != n) throw input_error("h-rep: equality dimension mismatch");

    Vec x0(n, Rat(0));
    Mat kbasis;
    if (!equalities.empty()) {
        Mat e;
        Vec rhs;
        for (const auto& h : equalities) {
            e.push_back(h.normal);
            rhs.push_back(h.offset);
        }
        auto sol = la::solve(e, rhs);
        if (!sol) return empty(ambient_dim);
        x0 = *sol;
        kbasis = la::kernel(e);
    } else {
        kbasis.assign(n, Vec(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) kbasis[i][i] = 1;
    }
    const size_t qz = kbasis.size();

    // substituted inequalities <nz, z> <= bz
    Mat nz(inequalities.size(), Vec(qz));
    Vec bz(inequalities.size());
    for (size_t i = 0; i < inequalities.size(); ++i) {
        for (size_t j = 0; j < qz; ++j) nz[i][j] = la::dot(inequalities[i].normal, kbasis[j]);
        bz[i] = inequalities[i].offset - la::dot(inequalities[i].normal, x0);
    }

    if (qz == 0) {
        for (size_t i = 0; i < inequalities.size(); ++i)
            if (bz[i] < 0) return empty(ambient_dim);
        return from_points({x0});
    }

    // cone over the polytope: rows (bz_i, -nz_i) plus t >= 0
    Mat cone_rows;
    for (size_t i = 0; i < inequalities.size(); ++i) {
        Vec row(qz + 1);
        row[0] = bz[i];
        for (size_t j = 0; j < qz; ++j) row[j + 1] = -nz[i][j];
        cone_rows.push_back(std::move(row));
    }
    {
        Vec row(qz + 1, Rat(0));
        row[0] = 1;
        cone_rows.push_back(std::move(row));
    }

    // quotient out lineality if present (empty or unbounded inputs)
    Mat lin = la::kernel(cone_rows);
    Mat w;  // rows spanning the pointed quotient
    if (lin.empty()) {
        w.assign(qz + 1, Vec(qz + 1, Rat(0)));
        for (size_t i = 0; i <= qz; ++i) w[i][i] = 1;
    } else {
        Mat rs = cone_rows;
        la::rref(rs);
        while (!rs.empty() && la::is_zero(rs.back())) rs.pop_back();
        w = rs;
    }
    Mat reduced(cone_rows.size(), Vec(w.size()));
    for (size_t i = 0; i < cone_rows.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j) reduced[i][j] = la::dot(cone_rows[i], w[j]);
    auto rays = dd_extreme_rays(reduced);

    std::vector<Vec> verts;
    bool recession = false;
    for (const auto& ry : rays) {
        Vec y(w.size());
        for (size_t j = 0; j < w.size(); ++j) y[j] = Rat(ry[j]);
        Vec tz(qz + 1, Rat(0));
        for (size_t j = 0; j < w.size(); ++j) tz = la::axpy(y[j], w[j], tz);
        if (tz[0] == 0) {
            recession = true;
            continue;
        }
        if (tz[0] < 0) continue;  // not in the cone; cannot happen for valid rays
        Vec v = x0;
        for (size_t j = 0; j < qz; ++j) v = la::axpy(tz[j + 1] / tz[0], kbasis[j], v);
        verts.push_back(std::move(v));
    }
    if (verts.empty()) return empty(ambient_dim);
    if (recession || !lin.empty()) throw input_error("h-rep describes an unbounded polyhedron");
    return from_points(verts);
}

bool Polytope::contains(const Vec& p) const {
    if (is_empty()) return false;
    if (p.size() != static_cast<size_t>(ambient_dim_))
        throw input_error("contains: dimension mismatch");
    for (const auto& e : equalities_)
        if (la::dot(e.normal, p) != e.offset) return false;
    for (const auto& f : facets_)
        if (la::dot(f.normal, p) > f.offset) return false;
    return true;
}

Rat Polytope::support(const Vec& direction) const {
    if (is_empty()) throw input_error("support of the empty polytope");
    Rat best = la::dot(direction, vertices_[0]);
    for (size_t i = 1; i < vertices_.size(); ++i)
        best = std::max(best, la::dot(direction, vertices_[i]));
    return best;
}

Vec Polytope::vertex_average() const {
    if (is_empty()) throw input_error("vertex average of the empty polytope");
    Vec avg(ambient_dim_, Rat(0));
    for (const auto& v : vertices_) avg = la::add(avg, v);
    return la::scale(Rat(1, static_cast<unsigned>(vertices_.size())), avg);
}

Polytope Polytope::translate(const Vec& t) const {
    if (is_empty()) return *this;
    std::vector<Vec> vs;
    for (const auto& v : vertices_) vs.push_back(la::add(v, t));
    return from_points(vs);
}

Polytope Polytope::dilate(const Rat& c) const {
    if (is_empty()) return *this;
    std::vector<Vec> vs;
    for (const auto& v : vertices_) vs.push_back(la::scale(c, v));
    return from_points(vs);
}

Polytope Polytope::shrink_toward(const Vec& center, const Rat& theta) const {
    if (is_empty()) return *this;
    std::vector<Vec> vs;
    for (const auto& v : vertices_)
        vs.push_back(la::axpy(theta, la::sub(v, center), center));
    return from_points(vs);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw input_error("minkowski sum: ambient dimension mismatch");
    if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
    std::vector<Vec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(la::add(a, b));
    return Polytope::from_points(sums);
}

std::vector<std::vector<int>> triangulate_indices(const std::vector<Vec>& hull_vertices) {
    std::map<Vec, int> index;
    for (size_t i = 0; i < hull_vertices.size(); ++i)
        index.emplace(hull_vertices[i], static_cast<int>(i));

    // recursive fan over facets not containing the lex-least vertex
    std::function<std::vector<std::vector<int>>(const std::vector<Vec>&)> rec =
        [&](const std::vector<Vec>& pts) -> std::vector<std::vector<int>> {
        Polytope p = Polytope::from_points(pts);
        const auto& vs = p.vertices();
        if (p.affine_dim() <= 0) return {{index.at(vs[0])}};
        if (p.affine_dim() == 1)
            return {{index.at(vs.front()), index.at(vs.back())}};
        const Vec& apex = vs[0];
        std::vector<std::vector<int>> out;
        for (const auto& f : p.facets()) {
            if (la::dot(f.normal, apex) == f.offset) continue;
            std::vector<Vec> face;
            for (const auto& v : vs)
                if (la::dot(f.normal, v) == f.offset) face.push_back(v);
            for (auto& simplex : rec(face)) {
                simplex.push_back(index.at(apex));
                out.push_back(std::move(simplex));
            }
        }
        return out;
    };
    return rec(hull_vertices);
}

}  // namespace okb::geom
