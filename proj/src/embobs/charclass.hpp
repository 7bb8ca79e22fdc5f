#ifndef EMBOBS_CHARCLASS_HPP
#define EMBOBS_CHARCLASS_HPP

#include "poly.hpp"

#include <optional>
#include <set>
#include <vector>

namespace embobs::charclass {

using gf2::Poly;
using gf2::RingPtr;

// Degreewise components [w_0, ..., w_d] of a total characteristic class in a
// presented cohomology ring; comp[i] has pure degree i and comp[0] = 1.
struct CharClassVector {
    RingPtr ring;
    std::vector<Poly> comp;

    int top_index() const { return static_cast<int>(comp.size()) - 1; }
    Poly total() const;

    static CharClassVector from_total(RingPtr ring, const Poly& total, int top_index);
    void validate() const;
};

struct ManifoldPresentation {
    RingPtr ring;
    int dim = 0;
    CharClassVector tangent_total; // w(tau M), components 0..dim
};

// Componentwise inverse total class: w(-tau) from w(tau), and conversely.
CharClassVector dual_total_class(const CharClassVector& w);

// D = d + max{ i : w_i(-tau M) != 0 }.
int cap_d(const ManifoldPresentation& mp);

// Closed connected manifolds satisfy d <= D < 2d; user presentations may not.
bool within_manifold_bounds(const ManifoldPresentation& mp);

// RP^d: ring GF(2)[T]/(T^{d+1}), total tangent class (1+T)^{d+1}.
ManifoldPresentation projective_space(int d);

// Trivial total class in GF(2)[T]/(T^{d+1}); a stably parallelizable model.
ManifoldPresentation sphere_presentation(int d);

// The polynomial a(t) of degree m-d-1 with a(t)*t*(t^d + w_1 t^{d-1} + ... +
// w_d) = t^m in H^*(M)[t], when w_i(-tau M) = 0 for all i >= m-d; nullopt
// otherwise. The product identity is re-verified on every hit. The extended
// ring appends the untruncated degree-1 generator named euler_var.
std::optional<Poly> division_witness(const ManifoldPresentation& mp, int m,
                                     const std::string& euler_var = "t");

// e(lambda (x) xi) = sum_i w_{k-i}(xi) e(lambda)^i splits across bidegrees,
// so the twisted class is nonzero iff some i with e(lambda)^i != 0 has
// w_{k-i}(xi) != 0.
bool twisted_euler_nonzero(const CharClassVector& wxi, int k,
                           const std::set<int>& nonzero_powers);

// 0 <= l <= m <= k, m+r <= D, and binom(k-l, k-m) odd (Lucas).
bool frick_harrison_admissible(long long l, long long m, long long k, long long r,
                               long long cap_d_value);

bool binom_is_odd(unsigned long long n, unsigned long long j);

struct DualChernResult {
    CharClassVector dual;
    int vanishing_threshold; // least n with dual components zero from n-d up
};

DualChernResult dual_chern(const CharClassVector& c, int d);

} // namespace embobs::charclass

#endif
