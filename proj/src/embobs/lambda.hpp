#ifndef EMBOBS_LAMBDA_HPP
#define EMBOBS_LAMBDA_HPP

#include "kring.hpp"

#include <vector>

namespace embobs::lambda {

using gf2::Int;
using gf2::KElem;
using gf2::KRing;

// Virtual sum of line-bundle classes: sum of mult * [cls] plus a trivial
// summand. Line classes are units of the coefficient ring; for the Hopf
// class H = 1 + mu the relation H^2 = 1 is automatic from mu^2 = -2 mu.
struct LineTerm {
    KElem cls;
    long mult = 0;
};

struct LambdaElement {
    KRing ring;
    std::vector<LineTerm> lines;
    long trivial_rank = 0;

    long rank() const;
    bool honest() const; // all multiplicities and the trivial rank nonnegative

    static LambdaElement trivial(KRing ring, long n);
    // a*H + b*1 over the special K ring.
    static LambdaElement hopf_sum(KRing ring, long hopf_mult, long trivial = 0);
    LambdaElement negated() const;
    LambdaElement operator+(const LambdaElement& o) const;
};

// Truncated power series over the coefficient ring; index = exponent.
struct FormalSeries {
    KRing ring;
    std::vector<KElem> coeff;

    static FormalSeries one(KRing ring, int order);
    const KElem& operator[](std::size_t i) const { return coeff[i]; }
    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_invert(const FormalSeries& u); // constant term must be a unit
FormalSeries series_pow(const FormalSeries& base, long e);

// lambda_t(xi) = prod (1 + [L_i] t)^{a_i} (1+t)^n, truncated at order n_max;
// negative multiplicities via series inversion.
FormalSeries lambda_series(const LambdaElement& xi, int n_max);

// K-theory Chern classes of an honest rank-k sum from the substitution
// z = 1-s in  sum_i v^i c_i(1-z)^{k-i} = sum_i (-z)^i lambda^i.
// Returned as ring elements; entry i carries the grading marker v^i.
std::vector<KElem> chern_from_lambda(const LambdaElement& xi, long k);

// gamma^0..gamma^N of a rank-0 virtual element, from the Chern-class route
// sum T^i gamma^i = sum (1-T)^i v^i c_i^K, cross-checked against the direct
// substitution lambda_{T/(1-T)}.
std::vector<KElem> gamma_ops(const LambdaElement& x, int n_max);

// K-Euler class: alternating sum of exterior powers of an honest rank-k sum.
KElem euler_k(const LambdaElement& xi, long k);

// gamma^i(R^d - tau RP^d) as the t^i coefficient of (1+mu t)^{-(d+1)}.
std::vector<KElem> atiyah_gammas(int d, unsigned f, int n_max);

// Least n >= d with gamma^i(R^d - tau RP^d) = 0 in SpecialKRing(f) for all
// i >= max(1, n-d).
int atiyah_bound(int d, unsigned f);

} // namespace embobs::lambda

#endif
