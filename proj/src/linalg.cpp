#include "okb/linalg.hpp"

#include <algorithm>

#include "okb/errors.hpp"

namespace okb::la {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec axpy(const Rat& c, const Vec& x, const Vec& y) {
    Vec out(y);
    for (size_t i = 0; i < x.size(); ++i) out[i] += c * x[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec scale(const Rat& c, const Vec& x) {
    Vec out(x);
    for (auto& v : out) v *= c;
    return out;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    Vec out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat bt = transpose(b);
    Mat out(a.size(), Vec(bt.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < bt.size(); ++j) out[i][j] = dot(a[i], bt[j]);
    return out;
}

size_t rref(Mat& m, std::vector<size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

size_t rank(Mat m) { return rref(m); }

Rat det(Mat m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (m[0].size() != n) throw internal_error("det: matrix not square");
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[c], m[p]);
            d = -d;
        }
        d *= m[c][c];
        const Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw internal_error("solve: rhs size mismatch");
    Mat aug(rows, Vec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    std::vector<size_t> piv;
    rref(aug, &piv);
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == cols) return std::nullopt;  // pivot in rhs column: inconsistent
    Vec x(cols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
    return x;
}

Mat kernel(const Mat& a) {
    if (a.empty()) return {};
    const size_t cols = a[0].size();
    Mat m = a;
    std::vector<size_t> piv;
    rref(m, &piv);
    std::vector<bool> is_piv(cols, false);
    for (size_t c : piv) is_piv[c] = true;
    Mat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
    IVec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

bool ivec_is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IMat hermite_normal_form(IMat rows, IMat* transform) {
    const size_t m = rows.size();
    const size_t n = m ? rows[0].size() : 0;
    IMat u;
    if (transform) {
        u.assign(m, IVec(m, 0));
        for (size_t i = 0; i < m; ++i) u[i][i] = 1;
    }
    auto row_op = [&](size_t i, size_t j, const Int& q) {
        // rows[i] -= q * rows[j]
        for (size_t c = 0; c < n; ++c) rows[i][c] -= q * rows[j][c];
        if (transform)
            for (size_t c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(rows[i], rows[j]);
        if (transform) std::swap(u[i], u[j]);
    };
    auto row_neg = [&](size_t i) {
        for (auto& x : rows[i]) x = -x;
        if (transform)
            for (auto& x : u[i]) x = -x;
    };

    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        // gcd elimination below position r in column c
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; ++i) {
                if (rows[i][c] == 0) continue;
                if (best == m || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == m) break;
            row_swap(r, best);
            bool done = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];  // truncated division is fine here
                row_op(i, r, q);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) row_neg(r);
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] - q * rows[r][c] < 0) q -= 1;  // floor division
            if (q != 0) row_op(i, r, q);
        }
        ++r;
    }
    if (transform) *transform = std::move(u);
    IMat basis(rows.begin(), rows.begin() + r);
    return basis;
}

IMat integer_kernel(const IMat& a) {
    // kernel(A) = left integer kernel of A^T; read it off the unimodular
    // transform of the HNF of A^T.
    if (a.empty()) return {};
    const size_t n = a[0].size();
    IMat at(n, IVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < n; ++j) at[j][i] = a[i][j];
    IMat u;
    IMat h = hermite_normal_form(at, &u);
    const size_t rk = h.size();
    IMat ker;
    for (size_t i = rk; i < n; ++i) ker.push_back(u[i]);
    return hermite_normal_form(ker);
}

Int lattice_index(const IMat& sub, const IMat& super) {
    if (sub.size() != super.size())
        throw internal_error("lattice_index: rank mismatch");
    const size_t r = sub.size();
    if (r == 0) return 1;
    Mat basis(r), coeff(r);
    for (size_t i = 0; i < r; ++i) basis[i] = to_vec(super[i]);
    Mat bt = transpose(basis);
    for (size_t i = 0; i < r; ++i) {
        auto c = solve(bt, to_vec(sub[i]));
        if (!c) throw internal_error("lattice_index: spans differ");
        for (const Rat& x : *c)
            if (!is_integral(x)) throw internal_error("lattice_index: not a sublattice");
        coeff[i] = *c;
    }
    Rat d = det(coeff);
    if (d < 0) d = -d;
    if (d == 0) throw internal_error("lattice_index: degenerate sublattice");
    return to_int(d);
}

IVec primitive(const Vec& v) {
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, den(x));
    IVec out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = num(v[i]) * (lcm / den(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

std::optional<Vec> coords_in_basis(const Mat& basis, const Vec& target) {
    if (basis.empty()) return is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(transpose(basis), target);
}

}  // namespace okb::la
