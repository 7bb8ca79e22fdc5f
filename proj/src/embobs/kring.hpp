#ifndef EMBOBS_KRING_HPP
#define EMBOBS_KRING_HPP

#include "poly.hpp"

#include <string>

namespace embobs::gf2 {

// Coefficient ring for the K-theory calculus on projective spaces:
// elements a + b*mu with a an integer, b an integer mod 2^f, and the
// rewrite rule mu^2 = -2*mu. The torsion exponent f is caller-supplied.
struct KRing {
    unsigned f = 1;        // mu part lives mod 2^f
    bool integral = false; // plain integers: the mu part must stay zero

    bool operator==(const KRing& o) const { return f == o.f && integral == o.integral; }
    bool operator!=(const KRing& o) const { return !(*this == o); }
};

class KElem {
public:
    KElem() = default;
    KElem(KRing ring, Int free, Int mu) : ring_(ring)
    {
        free_ = std::move(free);
        mu_ = reduce(std::move(mu));
        if (ring_.integral && mu_ != 0)
            throw std::invalid_argument("KElem: nonzero mu part in the integer ring");
    }

    static KElem from_int(KRing ring, const Int& a) { return KElem(ring, a, 0); }
    static KElem zero(KRing ring) { return from_int(ring, 0); }
    static KElem one(KRing ring) { return from_int(ring, 1); }
    // The Hopf class H = 1 + mu.
    static KElem hopf(KRing ring) { return KElem(ring, 1, 1); }
    // mu = H - 1.
    static KElem mu_class(KRing ring) { return KElem(ring, 0, 1); }

    const KRing& ring() const { return ring_; }
    const Int& free_part() const { return free_; }
    const Int& mu_part() const { return mu_; }
    bool is_zero() const { return free_ == 0 && mu_ == 0; }

    KElem operator+(const KElem& o) const
    {
        check(o);
        return KElem(ring_, free_ + o.free_, mu_ + o.mu_);
    }
    KElem operator-(const KElem& o) const
    {
        check(o);
        return KElem(ring_, free_ - o.free_, mu_ - o.mu_);
    }
    KElem operator*(const KElem& o) const
    {
        check(o);
        // (a + b mu)(c + d mu) = ac + (ad + bc - 2bd) mu
        return KElem(ring_, free_ * o.free_,
                     free_ * o.mu_ + mu_ * o.free_ - 2 * mu_ * o.mu_);
    }
    KElem negated() const { return KElem(ring_, -free_, -mu_); }

    bool is_unit() const { return free_ == 1 || free_ == -1; }

    // Inverse of a unit: free part +-1, mu part solved mod 2^f.
    KElem inverse() const
    {
        if (!is_unit())
            throw std::invalid_argument("KElem::inverse: free part must be a unit");
        // (a + b mu)(a + d mu) with a^2 = 1 requires d(a - 2b) = -b a.
        Int a = free_;
        if (ring_.integral) {
            if (mu_ != 0)
                throw std::invalid_argument("KElem::inverse: integer ring");
            return KElem(ring_, a, 0);
        }
        Int denom_inv = odd_inverse_mod_pow2(a - 2 * mu_, ring_.f);
        Int d = -a * mu_ * denom_inv;
        return KElem(ring_, a, d);
    }

    bool operator==(const KElem& o) const
    {
        return ring_ == o.ring_ && free_ == o.free_ && mu_ == o.mu_;
    }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    KRing ring_;
    Int free_ = 0;
    Int mu_ = 0;

    Int reduce(Int b) const
    {
        if (ring_.integral)
            return b;
        Int mod = Int(1) << ring_.f;
        b %= mod;
        if (b < 0)
            b += mod;
        return b;
    }
    void check(const KElem& o) const
    {
        if (ring_ != o.ring_)
            throw std::invalid_argument("KElem: coefficient ring mismatch");
    }
};

inline std::string KElem::to_string() const
{
    std::string s = free_.str();
    if (mu_ != 0)
        s += " + " + mu_.str() + "*mu";
    return s;
}

} // namespace embobs::gf2

#endif
