#include "okb/rep.hpp"

#include <algorithm>
#include <cctype>

#include "okb/errors.hpp"

namespace okb::rep {

RootData RootData::gl(int n) { return product({Factor{Factor::Kind::GL, n}}); }

RootData RootData::torus(int d) { return product({Factor{Factor::Kind::Torus, d}}); }

RootData RootData::product(std::vector<Factor> fs) {
    for (const auto& f : fs)
        if (f.rank < 1) throw input_error("group factor rank must be positive");
    RootData rd;
    rd.factors = std::move(fs);
    return rd;
}

RootData RootData::parse(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(std::tolower(static_cast<unsigned char>(c)));
    std::vector<Factor> fs;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('x', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        Factor f;
        size_t digits;
        if (tok.rfind("gl(", 0) == 0 && tok.back() == ')') {
            f.kind = Factor::Kind::GL;
            digits = 3;
            tok.pop_back();
        } else if (tok.rfind("gl", 0) == 0) {
            f.kind = Factor::Kind::GL;
            digits = 2;
        } else if (tok.rfind("t", 0) == 0) {
            f.kind = Factor::Kind::Torus;
            digits = 1;
        } else {
            throw input_error("unknown group factor: " + tok);
        }
        try {
            f.rank = std::stoi(tok.substr(digits));
        } catch (const std::exception&) {
            throw input_error("unreadable group factor: " + tok);
        }
        if (f.rank < 1) throw input_error("group factor rank must be positive");
        fs.push_back(f);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (fs.empty()) throw input_error("empty group name");
    return product(std::move(fs));
}

int RootData::dim() const {
    int d = 0;
    for (const auto& f : factors) d += f.rank;
    return d;
}

int RootData::num_positive_roots() const {
    int n = 0;
    for (const auto& f : factors)
        if (f.kind == Factor::Kind::GL) n += f.rank * (f.rank - 1) / 2;
    return n;
}

int RootData::pattern_dim() const { return num_positive_roots(); }

std::vector<IVec> RootData::positive_roots() const {
    std::vector<IVec> roots;
    int base = 0;
    for (const auto& f : factors) {
        if (f.kind == Factor::Kind::GL)
            for (int i = 0; i < f.rank; ++i)
                for (int j = i + 1; j < f.rank; ++j) {
                    IVec r(dim(), 0);
                    r[base + i] = 1;
                    r[base + j] = -1;
                    roots.push_back(std::move(r));
                }
        base += f.rank;
    }
    return roots;
}

Vec RootData::rho() const {
    Vec r(dim(), Rat(0));
    for (const auto& root : positive_roots())
        for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(root[i], 2);
    return r;
}

std::string RootData::name() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "x";
        s += (f.kind == Factor::Kind::GL ? "GL" : "T") + std::to_string(f.rank);
    }
    return s;
}

bool is_dominant(const RootData& rd, const Weight& w) {
    if (w.size() != static_cast<size_t>(rd.dim())) return false;
    int base = 0;
    for (const auto& f : rd.factors) {
        if (f.kind == RootData::Factor::Kind::GL)
            for (int i = 0; i + 1 < f.rank; ++i)
                if (w[base + i] < w[base + i + 1]) return false;
        base += f.rank;
    }
    return true;
}

void require_dominant(const RootData& rd, const Weight& w) {
    if (!is_dominant(rd, w))
        throw input_error("weight is not dominant for " + rd.name());
}

Weight scale_weight(const Weight& w, long k) {
    Weight out(w);
    for (auto& x : out) x *= k;
    return out;
}

Weight add_weights(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw input_error("weight dimension mismatch");
    Weight out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<long long> GCPattern::free_coords() const {
    std::vector<long long> out;
    for (const auto& rows : factor_rows)
        for (size_t r = 1; r < rows.size(); ++r)
            out.insert(out.end(), rows[r].begin(), rows[r].end());
    return out;
}

Weight GCPattern::weight(const RootData& rd) const {
    Weight w;
    size_t fi = 0;
    for (const auto& f : rd.factors) {
        if (f.kind == RootData::Factor::Kind::Torus) {
            // torus slice: the weight is the (length-rank) top row itself
            const auto& rows = factor_rows[fi++];
            w.insert(w.end(), rows[0].begin(), rows[0].end());
            continue;
        }
        const auto& rows = factor_rows[fi++];
        const int n = f.rank;
        // s_l = sum of the row with l entries; weight = (s_1, s_2-s_1, ...)
        std::vector<long long> s(n + 1, 0);
        for (int len = 1; len <= n; ++len)
            for (long long x : rows[n - len]) s[len] += x;
        for (int i = 1; i <= n; ++i) w.push_back(s[i] - s[i - 1]);
    }
    return w;
}

Int weyl_dim(const RootData& rd, const Weight& w) {
    require_dominant(rd, w);
    Int numer = 1, denom = 1;
    int base = 0;
    for (const auto& f : rd.factors) {
        if (f.kind == RootData::Factor::Kind::GL)
            for (int i = 0; i < f.rank; ++i)
                for (int j = i + 1; j < f.rank; ++j) {
                    numer *= Int(w[base + i] - w[base + j] + j - i);
                    denom *= j - i;
                }
        base += f.rank;
    }
    return numer / denom;
}

geom::Polytope gc_polytope(const RootData& rd, const Weight& w) {
    require_dominant(rd, w);
    const int nvar = rd.pattern_dim();
    if (nvar == 0) return geom::Polytope::point(Vec{});

    std::vector<geom::HalfSpace> ineqs;
    int base = 0, var_base = 0;
    for (const auto& f : rd.factors) {
        if (f.kind == RootData::Factor::Kind::GL && f.rank > 1) {
            const int n = f.rank;
            // variable layout: row r (1..n-1) has n-r entries, concatenated
            auto var = [&](int r, int i) {
                int off = 0;
                for (int rr = 1; rr < r; ++rr) off += n - rr;
                return var_base + off + i;
            };
            for (int r = 1; r <= n - 1; ++r)
                for (int i = 0; i < n - r; ++i) {
                    Vec upper(nvar, Rat(0)), lower(nvar, Rat(0));
                    Rat upper_off, lower_off;
                    // x[r][i] <= x[r-1][i]  and  x[r][i] >= x[r-1][i+1]
                    upper[var(r, i)] = 1;
                    lower[var(r, i)] = -1;
                    if (r == 1) {
                        upper_off = Rat(w[base + i]);
                        lower_off = Rat(-w[base + i + 1]);
                    } else {
                        upper[var(r - 1, i)] -= 1;
                        upper_off = 0;
                        lower[var(r - 1, i + 1)] += 1;
                        lower_off = 0;
                    }
                    ineqs.push_back({std::move(upper), upper_off});
                    ineqs.push_back({std::move(lower), lower_off});
                }
            var_base += n * (n - 1) / 2;
        }
        base += f.rank;
    }
    return geom::Polytope::from_hrep(nvar, ineqs);
}

namespace {

void enumerate_gl_rows(std::vector<std::vector<long long>>& rows, int n,
                       std::vector<std::vector<std::vector<long long>>>& out) {
    const auto& prev = rows.back();
    if (prev.size() == 1) {
        out.push_back(rows);
        return;
    }
    const size_t len = prev.size() - 1;
    std::vector<long long> cur(len);
    // fill positions recursively; entry i ranges over [prev[i+1], prev[i]]
    std::function<void(size_t)> fill = [&](size_t i) {
        if (i == len) {
            rows.push_back(cur);
            enumerate_gl_rows(rows, n, out);
            rows.pop_back();
            return;
        }
        for (long long v = prev[i + 1]; v <= prev[i]; ++v) {
            cur[i] = v;
            fill(i + 1);
        }
    };
    fill(0);
}

}  // namespace

GCEnumeration gc_patterns(const RootData& rd, const Weight& w) {
    require_dominant(rd, w);
    // per-factor pattern lists, then the cartesian product
    std::vector<std::vector<std::vector<std::vector<long long>>>> per_factor;
    int base = 0;
    for (const auto& f : rd.factors) {
        std::vector<long long> top(w.begin() + base, w.begin() + base + f.rank);
        std::vector<std::vector<std::vector<long long>>> list;
        if (f.kind == RootData::Factor::Kind::Torus || f.rank == 1) {
            list.push_back({top});
        } else {
            std::vector<std::vector<long long>> rows = {top};
            enumerate_gl_rows(rows, f.rank, list);
        }
        per_factor.push_back(std::move(list));
        base += f.rank;
    }

    GCEnumeration out;
    std::vector<size_t> idx(per_factor.size(), 0);
    while (true) {
        GCPattern p;
        for (size_t i = 0; i < per_factor.size(); ++i) p.factor_rows.push_back(per_factor[i][idx[i]]);
        ++out.table[p.weight(rd)];
        out.patterns.push_back(std::move(p));
        size_t i = 0;
        while (i < per_factor.size()) {
            if (++idx[i] < per_factor[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == per_factor.size()) break;
    }
    return out;
}

WeightMultiplicityTable character(const RootData& rd, const Weight& w) {
    return gc_patterns(rd, w).table;
}

Weight dual_weight(const RootData& rd, const Weight& w) {
    require_dominant(rd, w);
    Weight out;
    int base = 0;
    for (const auto& f : rd.factors) {
        for (int i = 0; i < f.rank; ++i) {
            int src = (f.kind == RootData::Factor::Kind::GL) ? (f.rank - 1 - i) : i;
            out.push_back(-w[base + src]);
        }
        base += f.rank;
    }
    return out;
}

geom::Polytope weight_polytope(const RootData& rd, const Weight& w) {
    require_dominant(rd, w);
    // orbit of the product of symmetric groups acting per GL factor
    std::vector<std::vector<std::vector<long long>>> orbits;
    int base = 0;
    for (const auto& f : rd.factors) {
        std::vector<long long> slice(w.begin() + base, w.begin() + base + f.rank);
        std::vector<std::vector<long long>> orbit;
        if (f.kind == RootData::Factor::Kind::Torus) {
            orbit.push_back(slice);
        } else {
            std::sort(slice.begin(), slice.end());
            do {
                orbit.push_back(slice);
            } while (std::next_permutation(slice.begin(), slice.end()));
        }
        orbits.push_back(std::move(orbit));
        base += f.rank;
    }
    std::vector<Vec> pts;
    std::vector<size_t> idx(orbits.size(), 0);
    while (true) {
        Vec v;
        for (size_t i = 0; i < orbits.size(); ++i)
            for (long long x : orbits[i][idx[i]]) v.push_back(Rat(x));
        pts.push_back(std::move(v));
        size_t i = 0;
        while (i < orbits.size()) {
            if (++idx[i] < orbits[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == orbits.size()) break;
    }
    return geom::Polytope::from_points(pts);
}

std::vector<std::pair<Weight, long long>> tensor_decompose(const RootData& rd, const Weight& a,
                                                           const Weight& b) {
    require_dominant(rd, a);
    require_dominant(rd, b);
    WeightMultiplicityTable cha = character(rd, a);
    WeightMultiplicityTable chb = character(rd, b);
    WeightMultiplicityTable prod;
    for (const auto& [wa, ma] : cha)
        for (const auto& [wb, mb] : chb) prod[add_weights(wa, wb)] += ma * mb;

    std::map<Weight, WeightMultiplicityTable> char_cache;
    std::vector<std::pair<Weight, long long>> result;
    while (!prod.empty()) {
        // lexicographically greatest weight with nonzero coefficient;
        // Weyl symmetry makes it dominant
        auto it = std::prev(prod.end());
        while (it->second == 0) {
            auto del = it;
            bool at_begin = (it == prod.begin());
            if (!at_begin) --it;
            prod.erase(del);
            if (at_begin) break;
        }
        if (prod.empty()) break;
        it = std::prev(prod.end());
        const Weight nu = it->first;
        const long long mult = it->second;
        if (mult < 0) throw internal_error("tensor decomposition produced a negative multiplicity");
        if (!is_dominant(rd, nu))
            throw internal_error("leading tensor weight is not dominant");
        auto cached = char_cache.find(nu);
        if (cached == char_cache.end())
            cached = char_cache.emplace(nu, character(rd, nu)).first;
        for (const auto& [wn, mn] : cached->second) {
            auto& entry = prod[wn];
            entry -= mult * mn;
            if (entry == 0) prod.erase(wn);
        }
        result.emplace_back(nu, mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return result;
}

geom::LinearFormProduct reduced_weyl_polynomial(const geom::Polytope& delta, const RootData& rd) {
    if (delta.is_empty()) throw input_error("reduced polynomial needs a nonempty body");
    if (delta.ambient_dim() != rd.dim())
        throw input_error("body does not live in the weight space of " + rd.name());
    const Vec rho = rd.rho();
    std::vector<geom::LinearFormProduct::Form> forms;
    Rat normalizer = 1;
    for (const auto& root : rd.positive_roots()) {
        Vec alpha = to_vec(root);
        bool orthogonal = true;
        for (const auto& v : delta.vertices())
            if (la::dot(alpha, v) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) continue;  // root lies in E
        normalizer /= la::dot(rho, alpha);
        forms.push_back({std::move(alpha), Rat(0)});
    }
    geom::LinearFormProduct f(std::move(forms), normalizer);
    if (f.degree() == 0) return geom::LinearFormProduct::constant(normalizer, rd.dim());
    return f;
}

}  // namespace okb::rep
