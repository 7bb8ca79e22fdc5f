#include "charclass.hpp"

#include <stdexcept>

namespace embobs::charclass {

using gf2::Domain;
using gf2::Generator;
using gf2::Int;
using gf2::Monomial;

Poly CharClassVector::total() const
{
    Poly t = Poly::zero(ring);
    for (const auto& c : comp)
        t = t + c;
    return t;
}

CharClassVector CharClassVector::from_total(RingPtr ring, const Poly& total, int top_index)
{
    if (top_index < 0)
        throw std::invalid_argument("CharClassVector: negative top index");
    CharClassVector v;
    v.ring = ring;
    v.comp.reserve(static_cast<std::size_t>(top_index) + 1);
    for (int i = 0; i <= top_index; ++i)
        v.comp.push_back(total.component_of_degree(static_cast<unsigned>(i)));
    return v;
}

void CharClassVector::validate() const
{
    if (comp.empty())
        throw std::invalid_argument("CharClassVector: no components");
    if (comp[0] != Poly::one(ring))
        throw std::invalid_argument("CharClassVector: w_0 must be 1");
    for (std::size_t i = 0; i < comp.size(); ++i)
        if (comp[i] != comp[i].component_of_degree(static_cast<unsigned>(i)))
            throw std::invalid_argument("CharClassVector: component has mixed degree");
}

CharClassVector dual_total_class(const CharClassVector& w)
{
    w.validate();
    Poly inv = gf2::series_invert(w.total());
    return CharClassVector::from_total(w.ring, inv, w.top_index());
}

int cap_d(const ManifoldPresentation& mp)
{
    CharClassVector dual = dual_total_class(mp.tangent_total);
    int top = 0;
    for (int i = 0; i <= dual.top_index(); ++i)
        if (!dual.comp[static_cast<std::size_t>(i)].is_zero())
            top = i;
    return mp.dim + top;
}

bool within_manifold_bounds(const ManifoldPresentation& mp)
{
    int d = cap_d(mp);
    return mp.dim <= d && d < 2 * mp.dim;
}

ManifoldPresentation projective_space(int d)
{
    if (d < 1)
        throw std::invalid_argument("projective_space: dimension must be >= 1");
    RingPtr ring = gf2::f2_trunc_ring("T", static_cast<unsigned>(d) + 1);
    Poly one_plus_t = Poly::one(ring) + Poly::generator(ring, 0);
    Poly total = gf2::poly_pow(one_plus_t, static_cast<unsigned>(d) + 1);
    ManifoldPresentation mp;
    mp.ring = ring;
    mp.dim = d;
    mp.tangent_total = CharClassVector::from_total(ring, total, d);
    return mp;
}

ManifoldPresentation sphere_presentation(int d)
{
    if (d < 1)
        throw std::invalid_argument("sphere_presentation: dimension must be >= 1");
    RingPtr ring = gf2::f2_trunc_ring("T", static_cast<unsigned>(d) + 1);
    ManifoldPresentation mp;
    mp.ring = ring;
    mp.dim = d;
    mp.tangent_total = CharClassVector::from_total(ring, Poly::one(ring), d);
    return mp;
}

std::optional<Poly> division_witness(const ManifoldPresentation& mp, int m,
                                     const std::string& euler_var)
{
    if (m <= mp.dim)
        throw std::invalid_argument("division_witness: m must exceed the dimension");

    CharClassVector dual = dual_total_class(mp.tangent_total);
    for (int i = m - mp.dim; i <= dual.top_index(); ++i)
        if (!dual.comp[static_cast<std::size_t>(i)].is_zero())
            return std::nullopt;

    // Extend the presentation by the untruncated Euler variable.
    std::vector<Generator> gens = mp.ring->generators();
    for (const auto& g : gens)
        if (g.name == euler_var)
            throw std::invalid_argument("division_witness: euler variable name clashes");
    gens.push_back(Generator{euler_var, 1, 0});
    RingPtr ext = gf2::make_ring(mp.ring->domain(), gens, mp.ring->mod_exp());
    std::size_t tvar = gens.size() - 1;

    auto embed = [&](const Poly& p) {
        Poly q(ext);
        for (const auto& [mono, c] : p.terms()) {
            Monomial em = mono;
            em.push_back(0);
            q.add_term(em, c);
        }
        return q;
    };
    auto tpow = [&](unsigned e) { return Poly::generator(ext, tvar, e); };

    // a(t) = sum_{i=0}^{m-d-1} w_i(-tau) t^{m-d-1-i}
    int deg = m - mp.dim - 1;
    Poly a = Poly::zero(ext);
    for (int i = 0; i <= deg && i <= dual.top_index(); ++i) {
        Poly term = embed(dual.comp[static_cast<std::size_t>(i)]);
        if (i < deg)
            term = term * tpow(static_cast<unsigned>(deg - i));
        a = a + term;
    }

    // Re-multiply: a(t) * t * (t^d + w_1 t^{d-1} + ... + w_d) must be t^m.
    Poly tangent_poly = Poly::zero(ext);
    for (int j = 0; j <= mp.dim; ++j) {
        Poly term = embed(mp.tangent_total.comp[static_cast<std::size_t>(j)]);
        if (j < mp.dim)
            term = term * tpow(static_cast<unsigned>(mp.dim - j));
        tangent_poly = tangent_poly + term;
    }
    Poly product = a * tpow(1) * tangent_poly;
    if (product != tpow(static_cast<unsigned>(m)))
        throw std::logic_error("division_witness: re-multiplication failed; "
                               "presentation is not a manifold ring");
    return a;
}

bool twisted_euler_nonzero(const CharClassVector& wxi, int k,
                           const std::set<int>& nonzero_powers)
{
    if (wxi.top_index() != k)
        throw std::invalid_argument("twisted_euler_nonzero: class vector must have k+1 components");
    for (int i : nonzero_powers) {
        if (i < 0 || i > k)
            continue;
        if (!wxi.comp[static_cast<std::size_t>(k - i)].is_zero())
            return true;
    }
    return false;
}

bool binom_is_odd(unsigned long long n, unsigned long long j)
{
    if (j > n)
        return false;
    // Lucas at p = 2: binom(n, j) is odd iff every base-2 digit of j is
    // dominated by the corresponding digit of n.
    return (n & j) == j;
}

bool frick_harrison_admissible(long long l, long long m, long long k, long long r,
                               long long cap_d_value)
{
    if (!(0 <= l && l <= m && m <= k))
        return false;
    if (m + r > cap_d_value)
        return false;
    return binom_is_odd(static_cast<unsigned long long>(k - l),
                        static_cast<unsigned long long>(k - m));
}

DualChernResult dual_chern(const CharClassVector& c, int d)
{
    c.validate();
    Poly inv = gf2::series_invert(c.total());
    CharClassVector dual = CharClassVector::from_total(c.ring, inv, c.top_index());
    int top = 0;
    for (int i = 1; i <= dual.top_index(); ++i)
        if (!dual.comp[static_cast<std::size_t>(i)].is_zero())
            top = i;
    int threshold = (top == 0) ? d : d + top + 1;
    return DualChernResult{std::move(dual), threshold};
}

} // namespace embobs::charclass
