#include "poly.hpp"

#include <sstream>
#include <stdexcept>

namespace embobs::gf2 {

Ring::Ring(Domain domain, std::vector<Generator> gens, unsigned mod_exp)
    : domain_(domain), mod_exp_(mod_exp), gens_(std::move(gens))
{
    if (domain_ == Domain::int_mod_pow2 && mod_exp_ == 0)
        throw std::invalid_argument("Ring: int_mod_pow2 requires a positive exponent");
    for (const auto& g : gens_)
        if (g.name.empty())
            throw std::invalid_argument("Ring: generator names must be nonempty");
}

bool Ring::same_presentation(const Ring& o) const
{
    if (domain_ != o.domain_ || mod_exp_ != o.mod_exp_ || gens_.size() != o.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree ||
            gens_[i].truncation != o.gens_[i].truncation)
            return false;
    }
    return true;
}

unsigned Ring::nilpotency_bound() const
{
    unsigned n = 0;
    for (const auto& g : gens_)
        if (g.truncation > 0)
            n += g.truncation - 1;
    return n;
}

bool Ring::fully_truncated() const
{
    for (const auto& g : gens_)
        if (g.truncation == 0)
            return false;
    return true;
}

RingPtr make_ring(Domain domain, std::vector<Generator> gens, unsigned mod_exp)
{
    return std::make_shared<Ring>(domain, std::move(gens), mod_exp);
}

RingPtr f2_trunc_ring(const std::string& gen, unsigned truncation)
{
    return make_ring(Domain::f2, {Generator{gen, 1, truncation}});
}

RingPtr int_trunc_ring(const std::string& gen, unsigned truncation)
{
    return make_ring(Domain::integer, {Generator{gen, 1, truncation}});
}

Poly Poly::constant(RingPtr ring, const Int& c)
{
    Poly p(std::move(ring));
    p.add_term(Monomial(p.ring_->arity(), 0), c);
    return p;
}

Poly Poly::generator(RingPtr ring, std::size_t index, std::uint32_t power)
{
    Poly p(std::move(ring));
    if (index >= p.ring_->arity())
        throw std::invalid_argument("Poly::generator: index out of range");
    Monomial m(p.ring_->arity(), 0);
    m[index] = power;
    p.add_term(m, 1);
    return p;
}

void Poly::check_same_ring(const Poly& o) const
{
    if (ring_ == o.ring_)
        return;
    if (!ring_ || !o.ring_ || !ring_->same_presentation(*o.ring_))
        throw std::invalid_argument("Poly: ring presentation mismatch");
}

bool Poly::monomial_alive(const Monomial& m) const
{
    const auto& gens = ring_->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].truncation > 0 && m[i] >= gens[i].truncation)
            return false;
    return true;
}

Int Poly::normalize(Int c) const
{
    switch (ring_->domain()) {
    case Domain::f2:
        c &= 1;
        return c;
    case Domain::integer:
        return c;
    case Domain::int_mod_pow2: {
        Int mod = Int(1) << ring_->mod_exp();
        c %= mod;
        if (c < 0)
            c += mod;
        return c;
    }
    }
    return c;
}

Int Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Int Poly::constant_term() const
{
    return coefficient(Monomial(ring_->arity(), 0));
}

void Poly::add_term(const Monomial& m, const Int& c)
{
    if (m.size() != ring_->arity())
        throw std::invalid_argument("Poly::add_term: monomial arity mismatch");
    if (!monomial_alive(m))
        return;
    Int v = normalize(terms_[m] + c);
    if (v == 0)
        terms_.erase(m);
    else
        terms_[m] = v;
}

Poly Poly::operator+(const Poly& o) const
{
    check_same_ring(o);
    Poly out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

Poly Poly::operator*(const Poly& o) const
{
    check_same_ring(o);
    Poly out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::negated() const
{
    Poly out(ring_);
    for (const auto& [m, c] : terms_)
        out.add_term(m, -c);
    return out;
}

bool Poly::operator==(const Poly& o) const
{
    check_same_ring(o);
    return terms_ == o.terms_;
}

unsigned Poly::monomial_degree(const Monomial& m) const
{
    unsigned d = 0;
    const auto& gens = ring_->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        d += gens[i].degree * m[i];
    return d;
}

Poly Poly::component_of_degree(unsigned d) const
{
    Poly out(ring_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == d)
            out.add_term(m, c);
    return out;
}

unsigned Poly::max_degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        unsigned md = monomial_degree(m);
        if (md > d)
            d = md;
    }
    return d;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        bool has_gen = false;
        std::ostringstream mono;
        const auto& gens = ring_->generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (has_gen)
                mono << "*";
            mono << gens[i].name;
            if (m[i] > 1)
                mono << "^" << m[i];
            has_gen = true;
        }
        if (!has_gen) {
            os << c;
        } else if (c == 1) {
            os << mono.str();
        } else if (c == -1) {
            os << "-" << mono.str();
        } else {
            os << c << "*" << mono.str();
        }
    }
    return os.str();
}

Poly poly_pow(const Poly& base, unsigned e)
{
    Poly acc = Poly::one(base.ring());
    Poly b = base;
    while (e) {
        if (e & 1)
            acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Int odd_inverse_mod_pow2(const Int& a, unsigned f)
{
    Int mod = Int(1) << f;
    Int x = a % mod;
    if (x < 0)
        x += mod;
    if ((x & 1) == 0)
        throw std::invalid_argument("odd_inverse_mod_pow2: argument is even");
    // Newton lifting: x_{k+1} = x_k (2 - a x_k) doubles the valid bits.
    Int inv = 1;
    for (unsigned bits = 1; bits < f; bits *= 2)
        inv = (inv * (2 - x * inv)) % mod;
    inv %= mod;
    if (inv < 0)
        inv += mod;
    return inv;
}

Poly series_invert(const Poly& u)
{
    const RingPtr& ring = u.ring();
    if (!ring)
        throw std::invalid_argument("series_invert: polynomial has no ring");
    if (!ring->fully_truncated())
        throw std::invalid_argument("series_invert: ring has an untruncated generator");

    Int c0 = u.constant_term();
    Int c0_inv;
    switch (ring->domain()) {
    case Domain::f2:
        if (c0 != 1)
            throw std::invalid_argument("series_invert: constant term is not a unit");
        c0_inv = 1;
        break;
    case Domain::integer:
        if (c0 != 1 && c0 != -1)
            throw std::invalid_argument("series_invert: constant term is not a unit");
        c0_inv = c0;
        break;
    case Domain::int_mod_pow2:
        if ((c0 & 1) == 0)
            throw std::invalid_argument("series_invert: constant term is not a unit");
        c0_inv = odd_inverse_mod_pow2(c0, ring->mod_exp());
        break;
    }

    // u = c0 (1 + n) with n nilpotent; geometric series terminates.
    Poly c0_inv_poly = Poly::constant(ring, c0_inv);
    Poly n = (u * c0_inv_poly) + Poly::one(ring).negated();
    Poly acc = Poly::one(ring);
    Poly term = Poly::one(ring);
    unsigned bound = ring->nilpotency_bound();
    for (unsigned k = 1; k <= bound && !term.is_zero(); ++k) {
        term = term * n.negated();
        acc = acc + term;
    }
    return acc * c0_inv_poly;
}

} // namespace embobs::gf2
