#include "okb/geometry.hpp"

#include <algorithm>
#include <map>

#include "okb/errors.hpp"

namespace okb::geom {

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// vertices of P expressed in the given sublattice frame: x = v0 + sum z_j S_j
struct FrameCoords {
    Vec origin;
    std::vector<Vec> zs;  // one per vertex, dimension = frame rank
};

FrameCoords to_frame(const Polytope& p, const IMat& frame) {
    FrameCoords fc;
    fc.origin = p.vertices()[0];
    Mat basis;
    for (const auto& row : frame) basis.push_back(to_vec(row));
    Mat bt = la::transpose(basis);
    for (const auto& v : p.vertices()) {
        if (frame.empty()) {
            fc.zs.push_back(Vec{});
            continue;
        }
        auto z = la::solve(bt, la::sub(v, fc.origin));
        if (!z) throw internal_error("vertex outside the sublattice span");
        fc.zs.push_back(*z);
    }
    return fc;
}

Rat simplex_volume(const std::vector<Vec>& zs, const std::vector<int>& simplex) {
    const size_t q = simplex.size() - 1;
    Mat m(q);
    for (size_t i = 0; i < q; ++i) m[i] = la::sub(zs[simplex[i + 1]], zs[simplex[0]]);
    Rat d = la::det(m);
    if (d < 0) d = -d;
    return d / Rat(factorial(static_cast<int>(q)));
}

}  // namespace

Lattice Lattice::standard(int n) {
    Lattice l;
    l.ambient_dim = n;
    l.basis.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) l.basis[i][i] = 1;
    return l;
}

void Lattice::validate() const {
    if (ambient_dim <= 0) throw input_error("lattice: ambient dimension must be positive");
    Mat m;
    for (const auto& row : basis) {
        if (row.size() != static_cast<size_t>(ambient_dim))
            throw input_error("lattice: basis row dimension mismatch");
        m.push_back(to_vec(row));
    }
    if (la::rank(m) != basis.size())
        throw input_error("lattice: basis rows are dependent");
}

std::optional<IMat> parallel_sublattice(const Polytope& p, const Lattice& l) {
    if (p.is_empty() || p.affine_dim() == 0) return IMat{};
    // direction space = kernel of the affine-hull equality normals;
    // lattice vectors in it: integer kernel of (equalities * basis^T)
    const auto& eqs = p.equalities();
    if (eqs.empty()) {
        // full-dimensional: the whole lattice (must itself be full rank)
        if (l.rank() < p.ambient_dim()) return std::nullopt;
        return l.basis;
    }
    IMat m(eqs.size(), IVec(l.basis.size()));
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = 0; j < l.basis.size(); ++j) {
            Rat v = la::dot(eqs[i].normal, to_vec(l.basis[j]));
            if (!is_integral(v)) throw internal_error("non-integer equality pairing");
            m[i][j] = to_int(v);
        }
    IMat coeffs = la::integer_kernel(m);
    IMat sub;
    for (const auto& c : coeffs) {
        IVec row(l.ambient_dim, 0);
        for (size_t j = 0; j < c.size(); ++j)
            for (int k = 0; k < l.ambient_dim; ++k) row[k] += c[j] * l.basis[j][k];
        sub.push_back(std::move(row));
    }
    if (static_cast<int>(sub.size()) != p.affine_dim()) return std::nullopt;
    return sub;
}

Rat normalized_volume(const Polytope& p, const Lattice& l) {
    if (p.is_empty()) return 0;
    if (p.ambient_dim() != l.ambient_dim)
        throw input_error("normalized volume: lattice dimension mismatch");
    if (p.affine_dim() == 0) return 1;
    auto sub = parallel_sublattice(p, l);
    if (!sub)
        throw input_error("normalized volume: affine span is irrational for the lattice");
    FrameCoords fc = to_frame(p, *sub);
    auto tris = triangulate_indices(fc.zs);
    Rat vol = 0;
    for (const auto& s : tris) vol += simplex_volume(fc.zs, s);
    return vol;
}

Rat volume_of_dim(const Polytope& p, int k) {
    if (p.is_empty() || p.affine_dim() < k) return 0;
    if (p.affine_dim() > k) throw internal_error("volume_of_dim: dimension exceeds k");
    return normalized_volume(p, Lattice::standard(p.ambient_dim()));
}

std::vector<Vec> lattice_points(const Polytope& p, const Lattice& l) {
    return lattice_points(p, l, Vec(l.ambient_dim, Rat(0)));
}

std::vector<Vec> lattice_points(const Polytope& p, const Lattice& l, const Vec& offset) {
    if (p.is_empty()) return {};
    if (p.ambient_dim() != l.ambient_dim)
        throw input_error("lattice points: dimension mismatch");
    const size_t r = l.basis.size();
    if (r == 0) {
        return p.contains(offset) ? std::vector<Vec>{offset} : std::vector<Vec>{};
    }

    // bounding box of P from its vertices
    const size_t n = l.ambient_dim;
    Vec lo = p.vertices()[0], hi = p.vertices()[0];
    for (const auto& v : p.vertices())
        for (size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }

    // choose r independent columns of the basis; c = B_J^{-1} (x_J - offset_J)
    Mat bmat;
    for (const auto& row : l.basis) bmat.push_back(to_vec(row));
    Mat bt = la::transpose(bmat);
    std::vector<size_t> piv;
    Mat tmp = bmat;
    la::rref(tmp, &piv);
    Mat bj(r, Vec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) bj[i][j] = bmat[i][piv[j]];
    Mat bj_t = la::transpose(bj);
    Mat inv(r, Vec(r));  // inv * x_J = coordinates
    for (size_t j = 0; j < r; ++j) {
        Vec e(r, Rat(0));
        e[j] = 1;
        auto col = la::solve(bj_t, e);
        if (!col) throw internal_error("lattice points: singular column choice");
        for (size_t i = 0; i < r; ++i) inv[j][i] = (*col)[i];
    }

    // outer integer box for c via interval arithmetic over the J-box
    std::vector<Int> clo(r), chi(r);
    for (size_t i = 0; i < r; ++i) {
        Rat a = 0, b = 0;
        for (size_t j = 0; j < r; ++j) {
            const Rat lo_j = lo[piv[j]] - offset[piv[j]];
            const Rat hi_j = hi[piv[j]] - offset[piv[j]];
            if (inv[i][j] >= 0) {
                a += inv[i][j] * lo_j;
                b += inv[i][j] * hi_j;
            } else {
                a += inv[i][j] * hi_j;
                b += inv[i][j] * lo_j;
            }
        }
        clo[i] = ceil_rat(a);
        chi[i] = floor_rat(b);
    }

    Int cells = 1;
    for (size_t i = 0; i < r; ++i) {
        if (chi[i] < clo[i]) return {};
        cells *= chi[i] - clo[i] + 1;
        if (cells > 50000000) throw cap_error("lattice point scan box too large");
    }

    std::vector<Vec> out;
    std::vector<Int> c(r);
    for (size_t i = 0; i < r; ++i) c[i] = clo[i];
    while (true) {
        Vec x = offset;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < n; ++j) x[j] += Rat(c[i]) * Rat(l.basis[i][j]);
        if (p.contains(x)) out.push_back(std::move(x));
        size_t k = 0;
        while (k < r) {
            if (c[k] < chi[k]) {
                ++c[k];
                break;
            }
            c[k] = clo[k];
            ++k;
        }
        if (k == r) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
    return out;
}

Rat mixed_volume(const std::vector<Polytope>& ps) {
    const size_t n = ps.size();
    if (n == 0) throw input_error("mixed volume of zero bodies");
    for (const auto& p : ps)
        if (p.ambient_dim() != static_cast<int>(n))
            throw input_error("mixed volume: need n bodies in R^n");
    // cache Minkowski sums by subset bitmask
    std::map<unsigned, Polytope> sums;
    Rat total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned low = mask & (mask - 1);
        unsigned bit = mask ^ low;
        size_t idx = 0;
        while (!((bit >> idx) & 1)) ++idx;
        Polytope s = low == 0 ? ps[idx] : minkowski_sum(sums.at(low), ps[idx]);
        int popcount = __builtin_popcount(mask);
        Rat vol = volume_of_dim(s, static_cast<int>(n));
        total += ((n - popcount) % 2 == 0 ? vol : -vol);
        sums.emplace(mask, std::move(s));
    }
    return total / Rat(factorial(static_cast<int>(n)));
}

LinearFormProduct::LinearFormProduct(std::vector<Form> forms, const Rat& normalizer)
    : normalizer_(normalizer) {
    for (auto& f : forms) {
        if (dim_ == 0) dim_ = static_cast<int>(f.coeff.size());
        if (f.coeff.size() != static_cast<size_t>(dim_))
            throw input_error("linear form product: mixed dimensions");
        if (la::is_zero(f.coeff))
            normalizer_ *= f.constant;
        else
            forms_.push_back(std::move(f));
    }
}

LinearFormProduct LinearFormProduct::constant(const Rat& c, int dim) {
    LinearFormProduct f;
    f.normalizer_ = c;
    f.dim_ = dim;
    return f;
}

Rat LinearFormProduct::evaluate(const Vec& x) const {
    Rat v = normalizer_;
    for (const auto& f : forms_) v *= la::dot(f.coeff, x) + f.constant;
    return v;
}

bool LinearFormProduct::is_homogeneous() const {
    return std::all_of(forms_.begin(), forms_.end(),
                       [](const Form& f) { return f.constant == 0; });
}

LinearFormProduct LinearFormProduct::top_homogeneous() const {
    std::vector<Form> fs = forms_;
    for (auto& f : fs) f.constant = 0;
    LinearFormProduct out(std::move(fs), normalizer_);
    out.dim_ = dim_;
    return out;
}

Rat integrate_linear_form_product(const Polytope& p, const LinearFormProduct& f,
                                  const Lattice& l) {
    if (p.is_empty()) return 0;
    if (f.dim() != 0 && f.dim() != p.ambient_dim())
        throw input_error("integrate: form dimension mismatch");
    if (p.affine_dim() == 0) return f.evaluate(p.vertices()[0]);

    auto sub = parallel_sublattice(p, l);
    if (!sub) throw input_error("integrate: affine span is irrational for the lattice");
    FrameCoords fc = to_frame(p, *sub);
    const size_t q = p.affine_dim();

    // forms in z-coordinates: <coeff, x> + c = <coeff_z, z> + (<coeff, v0> + c)
    struct ZForm {
        Vec coeff;
        Rat constant;
    };
    std::vector<ZForm> zforms;
    for (const auto& fm : f.forms()) {
        ZForm zf;
        zf.coeff.resize(q);
        for (size_t j = 0; j < q; ++j) zf.coeff[j] = la::dot(fm.coeff, to_vec((*sub)[j]));
        zf.constant = la::dot(fm.coeff, fc.origin) + fm.constant;
        zforms.push_back(std::move(zf));
    }

    auto tris = triangulate_indices(fc.zs);
    Rat total = 0;
    const Int qfact = factorial(static_cast<int>(q));
    for (const auto& simplex : tris) {
        Rat vol = simplex_volume(fc.zs, simplex);
        if (vol == 0) continue;
        // expand prod_j (sum_i d_{j,i} y_i) over barycentric monomials
        std::map<std::vector<int>, Rat> mono;
        mono[std::vector<int>(q + 1, 0)] = f.normalizer();
        for (const auto& zf : zforms) {
            std::vector<Rat> d(q + 1);
            for (size_t i = 0; i <= q; ++i)
                d[i] = la::dot(zf.coeff, fc.zs[simplex[i]]) + zf.constant;
            std::map<std::vector<int>, Rat> next;
            for (const auto& [alpha, coef] : mono)
                for (size_t i = 0; i <= q; ++i) {
                    if (d[i] == 0) continue;
                    auto beta = alpha;
                    ++beta[i];
                    next[beta] += coef * d[i];
                }
            mono = std::move(next);
        }
        // ∫_T y^alpha dγ = vol(T) · q! · prod(alpha_i!) / (|alpha| + q)!
        Rat part = 0;
        for (const auto& [alpha, coef] : mono) {
            if (coef == 0) continue;
            Int numfac = qfact;
            int total_deg = 0;
            for (int a : alpha) {
                numfac *= factorial(a);
                total_deg += a;
            }
            part += coef * Rat(numfac, factorial(total_deg + static_cast<int>(q)));
        }
        total += part * vol;
    }
    return total;
}

Rat mixed_integral(const std::vector<Polytope>& ps, const LinearFormProduct& f) {
    const size_t n = ps.size();
    if (n == 0) throw input_error("mixed integral of zero bodies");
    const int r = ps[0].ambient_dim();
    for (const auto& p : ps)
        if (p.ambient_dim() != r) throw input_error("mixed integral: mixed ambient dimensions");
    if (!f.is_homogeneous())
        throw input_error("mixed integral: form must be homogeneous");
    if (f.degree() + r != static_cast<int>(n))
        throw input_error("mixed integral: degree(f) + ambient dim must equal body count");
    const Lattice std_lat = Lattice::standard(r);
    auto int_of = [&](const Polytope& p) -> Rat {
        if (p.is_empty() || p.affine_dim() < r) return 0;
        return integrate_linear_form_product(p, f, std_lat);
    };
    std::map<unsigned, Polytope> sums;
    Rat total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned low = mask & (mask - 1);
        unsigned bit = mask ^ low;
        size_t idx = 0;
        while (!((bit >> idx) & 1)) ++idx;
        Polytope s = low == 0 ? ps[idx] : minkowski_sum(sums.at(low), ps[idx]);
        int popcount = __builtin_popcount(mask);
        Rat val = int_of(s);
        total += ((n - popcount) % 2 == 0 ? val : -val);
        sums.emplace(mask, std::move(s));
    }
    return total / Rat(factorial(static_cast<int>(n)));
}

SlicedPolytope slice(const Polytope& p, const Mat& map, const Vec& y) {
    if (map.empty() || map[0].size() != static_cast<size_t>(p.ambient_dim()))
        throw input_error("slice: map dimension mismatch");
    if (y.size() != map.size()) throw input_error("slice: target dimension mismatch");

    IMat imap(map.size());
    for (size_t i = 0; i < map.size(); ++i) imap[i] = la::primitive(map[i]);
    // primitive() rescales rows; keep the exact map for solving
    IMat kernel_rows = la::integer_kernel(imap);

    SlicedPolytope out;
    out.frame = kernel_rows;
    auto x0 = la::solve(map, y);
    if (!x0 || p.is_empty()) {
        out.fiber = Polytope::empty(static_cast<int>(kernel_rows.size()));
        return out;
    }
    out.base_point = *x0;

    std::vector<HalfSpace> ineqs;
    std::vector<Hyperplane> eqs;
    const size_t qz = kernel_rows.size();
    for (const auto& fct : p.facets()) {
        Vec nz(qz);
        for (size_t j = 0; j < qz; ++j) nz[j] = la::dot(fct.normal, to_vec(kernel_rows[j]));
        ineqs.push_back({std::move(nz), fct.offset - la::dot(fct.normal, out.base_point)});
    }
    for (const auto& e : p.equalities()) {
        Vec nz(qz);
        for (size_t j = 0; j < qz; ++j) nz[j] = la::dot(e.normal, to_vec(kernel_rows[j]));
        eqs.push_back({std::move(nz), e.offset - la::dot(e.normal, out.base_point)});
    }
    out.fiber = Polytope::from_hrep(static_cast<int>(qz), ineqs, eqs);
    return out;
}

}  // namespace okb::geom
