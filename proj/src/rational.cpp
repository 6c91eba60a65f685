#include "okb/rational.hpp"

#include "okb/errors.hpp"

namespace okb {

ResourceCaps& caps() {
    static ResourceCaps c;
    return c;
}

std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw input_error("zero denominator in rational literal: " + s);
        return Rat(p, q);
    } catch (const std::exception&) {
        throw input_error("malformed rational literal: " + s);
    }
}

Vec to_vec(const IVec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

bool is_integral(const Rat& q) { return den(q) == 1; }

Int to_int(const Rat& q) {
    if (!is_integral(q)) throw internal_error("expected integer, got " + rat_to_string(q));
    return num(q);
}

Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (f * d > n) f -= 1;
    return f;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

Int iroot(const Int& x, unsigned n) {
    if (x < 0) throw internal_error("iroot of negative value");
    if (x == 0 || n == 1) return x;
    // binary search; bit length gives a safe upper bound
    Int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, n) <= x) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

int lex_compare(const Vec& a, const Vec& b) {
    const size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

}  // namespace okb
