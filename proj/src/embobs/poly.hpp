#ifndef EMBOBS_POLY_HPP
#define EMBOBS_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace embobs::gf2 {

using Int = boost::multiprecision::cpp_int;

enum class Domain {
    f2,           // GF(2)
    integer,      // arbitrary-precision integers
    int_mod_pow2, // integers mod 2^f, canonical residues in [0, 2^f)
};

struct Generator {
    std::string name;
    unsigned degree = 1;
    unsigned truncation = 0; // gen^truncation = 0; 0 means untruncated
};

// Immutable presentation of a truncated polynomial ring.
class Ring {
public:
    Ring(Domain domain, std::vector<Generator> gens, unsigned mod_exp = 0);

    Domain domain() const { return domain_; }
    unsigned mod_exp() const { return mod_exp_; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t arity() const { return gens_.size(); }

    bool same_presentation(const Ring& o) const;

    // Sum of (truncation-1) over truncated generators: a nilpotency bound for
    // the positive-degree part.
    unsigned nilpotency_bound() const;
    bool fully_truncated() const;

private:
    Domain domain_;
    unsigned mod_exp_;
    std::vector<Generator> gens_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Domain domain, std::vector<Generator> gens, unsigned mod_exp = 0);

// Single-generator helpers used throughout the characteristic class code.
RingPtr f2_trunc_ring(const std::string& gen, unsigned truncation);
RingPtr int_trunc_ring(const std::string& gen, unsigned truncation);

using Monomial = std::vector<std::uint32_t>; // exponent per generator

// Sparse truncated polynomial; monomials ordered lexicographically by
// generator exponents. Zero coefficients are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Int& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Poly generator(RingPtr ring, std::size_t index, std::uint32_t power = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Monomial& m) const;
    Int constant_term() const;
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c);

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Weighted total degree of a monomial under the ring's generator degrees.
    unsigned monomial_degree(const Monomial& m) const;

    // Sum of the terms of pure weighted degree d.
    Poly component_of_degree(unsigned d) const;
    unsigned max_degree() const; // 0 for the zero polynomial

    std::string to_string() const;

private:
    RingPtr ring_;
    std::map<Monomial, Int> terms_;

    void check_same_ring(const Poly& o) const;
    bool monomial_alive(const Monomial& m) const;
    Int normalize(Int c) const;
};

Poly poly_pow(const Poly& base, unsigned e);

// Multiplicative inverse of a unit-plus-nilpotent series in a fully truncated
// ring. Throws std::invalid_argument when the constant term is not a unit of
// the coefficient domain or when an untruncated generator occurs.
Poly series_invert(const Poly& u);

// Inverse of an odd residue mod 2^f.
Int odd_inverse_mod_pow2(const Int& a, unsigned f);

} // namespace embobs::gf2

#endif
