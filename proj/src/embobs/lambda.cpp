#include "lambda.hpp"

#include <stdexcept>

namespace embobs::lambda {

long LambdaElement::rank() const
{
    long r = trivial_rank;
    for (const auto& t : lines)
        r += t.mult;
    return r;
}

bool LambdaElement::honest() const
{
    if (trivial_rank < 0)
        return false;
    for (const auto& t : lines)
        if (t.mult < 0)
            return false;
    return true;
}

LambdaElement LambdaElement::trivial(KRing ring, long n)
{
    return LambdaElement{ring, {}, n};
}

LambdaElement LambdaElement::hopf_sum(KRing ring, long hopf_mult, long trivial)
{
    LambdaElement e{ring, {}, trivial};
    if (hopf_mult != 0)
        e.lines.push_back(LineTerm{KElem::hopf(ring), hopf_mult});
    return e;
}

LambdaElement LambdaElement::negated() const
{
    LambdaElement e{ring, lines, -trivial_rank};
    for (auto& t : e.lines)
        t.mult = -t.mult;
    return e;
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const
{
    if (ring != o.ring)
        throw std::invalid_argument("LambdaElement: ring mismatch");
    LambdaElement e{ring, lines, trivial_rank + o.trivial_rank};
    for (const auto& t : o.lines) {
        bool merged = false;
        for (auto& mine : e.lines) {
            if (mine.cls == t.cls) {
                mine.mult += t.mult;
                merged = true;
                break;
            }
        }
        if (!merged)
            e.lines.push_back(t);
    }
    std::erase_if(e.lines, [](const LineTerm& t) { return t.mult == 0; });
    return e;
}

FormalSeries FormalSeries::one(KRing ring, int order)
{
    FormalSeries s{ring, std::vector<KElem>(static_cast<std::size_t>(order) + 1,
                                            KElem::zero(ring))};
    s.coeff[0] = KElem::one(ring);
    return s;
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b)
{
    if (a.ring != b.ring)
        throw std::invalid_argument("series_mul: ring mismatch");
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: order mismatch");
    FormalSeries out{a.ring, std::vector<KElem>(a.coeff.size(), KElem::zero(a.ring))};
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < b.coeff.size(); ++j)
            out.coeff[i + j] = out.coeff[i + j] + a.coeff[i] * b.coeff[j];
    }
    return out;
}

FormalSeries series_invert(const FormalSeries& u)
{
    const KElem& c0 = u.coeff.at(0);
    KElem c0_inv = c0.inverse();
    FormalSeries v{u.ring, std::vector<KElem>(u.coeff.size(), KElem::zero(u.ring))};
    v.coeff[0] = c0_inv;
    for (std::size_t k = 1; k < u.coeff.size(); ++k) {
        KElem acc = KElem::zero(u.ring);
        for (std::size_t j = 1; j <= k; ++j)
            acc = acc + u.coeff[j] * v.coeff[k - j];
        v.coeff[k] = acc.negated() * c0_inv;
    }
    return v;
}

FormalSeries series_pow(const FormalSeries& base, long e)
{
    FormalSeries b = e < 0 ? series_invert(base) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    FormalSeries acc = FormalSeries::one(base.ring, base.order());
    while (n) {
        if (n & 1)
            acc = series_mul(acc, b);
        b = series_mul(b, b);
        n >>= 1;
    }
    return acc;
}

FormalSeries lambda_series(const LambdaElement& xi, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("lambda_series: negative truncation order");
    FormalSeries acc = FormalSeries::one(xi.ring, n_max);
    auto linear = [&](const KElem& cls) {
        FormalSeries s = FormalSeries::one(xi.ring, n_max);
        if (n_max >= 1)
            s.coeff[1] = cls;
        return s;
    };
    for (const auto& t : xi.lines)
        acc = series_mul(acc, series_pow(linear(t.cls), t.mult));
    acc = series_mul(acc, series_pow(linear(KElem::one(xi.ring)), xi.trivial_rank));
    return acc;
}

std::vector<KElem> chern_from_lambda(const LambdaElement& xi, long k)
{
    if (k < 0)
        throw std::invalid_argument("chern_from_lambda: negative rank");
    if (!xi.honest() || xi.rank() != k)
        throw std::invalid_argument("chern_from_lambda: element must be an honest rank-k sum");

    FormalSeries lam = lambda_series(xi, static_cast<int>(k));

    // P(s) = sum_i lambda^i (s-1)^i; then c_i^K is the coefficient of s^{k-i}.
    std::vector<KElem> p(static_cast<std::size_t>(k) + 1, KElem::zero(xi.ring));
    // (s-1)^i expanded by Pascal recursion.
    std::vector<KElem> power(1, KElem::one(xi.ring)); // (s-1)^0
    for (long i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j < power.size(); ++j)
            p[j] = p[j] + lam.coeff[static_cast<std::size_t>(i)] * power[j];
        // multiply the power by (s-1)
        std::vector<KElem> next(power.size() + 1, KElem::zero(xi.ring));
        for (std::size_t j = 0; j < power.size(); ++j) {
            next[j + 1] = next[j + 1] + power[j];
            next[j] = next[j] + power[j].negated();
        }
        power = std::move(next);
    }

    std::vector<KElem> c(static_cast<std::size_t>(k) + 1, KElem::zero(xi.ring));
    for (long i = 0; i <= k; ++i)
        c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(k - i)];
    return c;
}

namespace {

// sum_{i=0}^{k} (1-T)^i c_i^K(xi) as a truncated series in T.
FormalSeries chern_side_series(const LambdaElement& xi, int n_max)
{
    long k = xi.rank();
    std::vector<KElem> c = chern_from_lambda(xi, k);
    FormalSeries acc{xi.ring, std::vector<KElem>(static_cast<std::size_t>(n_max) + 1,
                                                 KElem::zero(xi.ring))};
    FormalSeries one_minus_t = FormalSeries::one(xi.ring, n_max);
    if (n_max >= 1)
        one_minus_t.coeff[1] = KElem::one(xi.ring).negated();
    FormalSeries power = FormalSeries::one(xi.ring, n_max);
    for (long i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j < acc.coeff.size(); ++j)
            acc.coeff[j] = acc.coeff[j] + power.coeff[j] * c[static_cast<std::size_t>(i)];
        power = series_mul(power, one_minus_t);
    }
    return acc;
}

} // namespace

std::vector<KElem> gamma_ops(const LambdaElement& x, int n_max)
{
    if (x.rank() != 0)
        throw std::invalid_argument("gamma_ops: element must have rank 0");

    LambdaElement pos{x.ring, {}, std::max(x.trivial_rank, 0L)};
    LambdaElement neg{x.ring, {}, std::max(-x.trivial_rank, 0L)};
    for (const auto& t : x.lines) {
        if (t.mult > 0)
            pos.lines.push_back(t);
        else if (t.mult < 0)
            neg.lines.push_back(LineTerm{t.cls, -t.mult});
    }

    FormalSeries sp = chern_side_series(pos, n_max);
    FormalSeries sm = chern_side_series(neg, n_max);
    FormalSeries gamma = series_mul(sp, series_invert(sm));

    // Independent route: lambda_{T/(1-T)}(x) = prod (1 + ([L]-1) T)^{a} for
    // rank-0 x.
    FormalSeries direct = FormalSeries::one(x.ring, n_max);
    for (const auto& t : x.lines) {
        FormalSeries lin = FormalSeries::one(x.ring, n_max);
        if (n_max >= 1)
            lin.coeff[1] = t.cls - KElem::one(x.ring);
        direct = series_mul(direct, series_pow(lin, t.mult));
    }
    for (std::size_t i = 0; i < gamma.coeff.size(); ++i)
        if (gamma.coeff[i] != direct.coeff[i])
            throw std::logic_error("gamma_ops: Chern route disagrees with direct substitution");

    return gamma.coeff;
}

KElem euler_k(const LambdaElement& xi, long k)
{
    if (!xi.honest() || xi.rank() != k)
        throw std::invalid_argument("euler_k: element must be an honest rank-k sum");
    FormalSeries lam = lambda_series(xi, static_cast<int>(k));
    KElem acc = KElem::zero(xi.ring);
    for (long i = 0; i <= k; ++i) {
        KElem term = lam.coeff[static_cast<std::size_t>(i)];
        if (i & 1)
            term = term.negated();
        acc = acc + term;
    }
    return acc;
}

std::vector<KElem> atiyah_gammas(int d, unsigned f, int n_max)
{
    if (d < 1 || f < 1)
        throw std::invalid_argument("atiyah_gammas: need d >= 1 and f >= 1");
    KRing ring{f, false};
    // R^d - tau M = (d+1) - (d+1)H for M = RP^d, from R + tau M = (d+1)H.
    LambdaElement x = LambdaElement::hopf_sum(ring, -(d + 1), d + 1);
    return gamma_ops(x, n_max);
}

int atiyah_bound(int d, unsigned f)
{
    // gamma^i carries a factor 2^{i-1} on the mu part, so orders above f+1
    // vanish identically.
    std::vector<KElem> g = atiyah_gammas(d, f, static_cast<int>(f) + 1);
    int top = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!g[i].is_zero())
            top = static_cast<int>(i);
    return top == 0 ? d : d + top + 1;
}

} // namespace embobs::lambda
