#ifndef OKB_SEMIGROUP_HPP
#define OKB_SEMIGROUP_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "okb/geometry.hpp"

namespace okb::sgp {

// Lattice points at one level. Desk-scale coordinates; additions are bound
// checked at construction so int64 arithmetic cannot overflow.
using Point = std::vector<long long>;

Vec point_to_vec(const Point& p);

struct Generator {
    long level = 0;
    Point point;
};

// A graded subsemigroup of Z_{>=0} x Z^n given by finite generators or by
// explicitly provided levels up to a cutoff. Level 0 is always {0}.
class Semigroup {
public:
    static Semigroup from_generators(int n, std::vector<Generator> gens);
    static Semigroup from_levels(int n, long k_max,
                                 std::map<long, std::vector<Point>> levels);
    // levelwise addition: level k of the result is the sumset of the levels
    static Semigroup levelwise_sum(const Semigroup& a, const Semigroup& b);

    int ambient_n() const { return n_; }
    bool finitely_generated() const { return kind_ == Kind::Generators; }
    long cutoff() const;  // max usable level (LONG_MAX-like cap for generators)
    const std::vector<Generator>& generators() const { return gens_; }

    // sorted, deduplicated level set
    std::vector<Point> level(long k) const;
    // H_S(k) for k = 0..K
    std::vector<long long> hilbert(long K) const;
    // streams levels 1..K in order (windowed; memory stays bounded)
    void scan(long K, const std::function<void(long, const std::vector<Point>&)>& sink) const;

    long level_gcd(long probe_up_to = 64) const;  // m(S)

private:
    enum class Kind { Generators, Provided, Sum };
    Kind kind_ = Kind::Generators;
    int n_ = 0;
    std::vector<Generator> gens_;
    long k_max_ = 0;
    std::map<long, std::vector<Point>> provided_;
    std::shared_ptr<Semigroup> left_, right_;
};

struct SemigroupSummary {
    IMat group_basis;           // G(S): basis rows in Z^{1+n}
    std::vector<IVec> cone_rays;  // primitive generators of C(S)
    int span_dim = 0;           // dim L(S)
    IMat level_lattice;         // Λ(S): basis rows in Z^n
    Int ind = 1;                // index of Λ(S) in Z^n ∩ span(Λ(S))
    long m = 1;                 // gcd of occupied levels
    bool strongly_nonneg = false;
    bool cutoff_limited = false;  // conclusions only valid up to the cutoff
};

// Throws assumption_error when m(S) != 1.
SemigroupSummary analyze(const Semigroup& s);

struct BodyResult {
    geom::Polytope body;
    bool exact = true;  // false when derived from an oracle cutoff
};

// Newton-Okounkov body: closure of {x/k : (k,x) in S} (exact for finite
// generators; cutoff hull otherwise).
BodyResult newton_okounkov_body(const Semigroup& s);

struct RegLevelReport {
    long k = 0;
    std::vector<Point> gaps;            // Reg(S)_k \ S_k
    std::vector<Point> gaps_in_shrunk;  // the subset inside the shrunk cone
};

struct RegScanReport {
    std::vector<RegLevelReport> levels;
    long empirical_n = 0;  // largest level <= K with a shrunk-cone gap
    geom::Polytope body;
    geom::Polytope shrunk_body;
};

// Approximation-theorem scan: compares S_k against Reg(S)_k = G(S) ∩ k·Δ(S)
// and locates the level beyond which gaps leave the shrunk cone.
RegScanReport regularization_scan(const Semigroup& s, const Rat& theta, long K);

struct GrowthReport {
    Rat empirical_ratio;  // sum of f over S_K divided by K^{q+d}
    Rat exact_limit;      // (1/ind) * integral of top part of f over the body
    long k = 0;
    int q = 0;
    int degree = 0;
    long long count_at_k = 0;
};

GrowthReport growth_check(const Semigroup& s, const geom::LinearFormProduct& f, long K);

// exact center of mass (intrinsic, via coordinate integrals)
Vec centroid(const geom::Polytope& p);

}  // namespace okb::sgp

#endif
