#pragma once

#include <cstdint>

#include "brpic/errors.hpp"

namespace brpic {

// A residue mod p, always kept canonical in [0, p).
using Residue = std::uint32_t;

// Scalar context for F_p. Everything downstream (vectors, matrices, forms)
// carries one of these by value; two contexts are interchangeable iff their
// moduli agree.
//
// The guarded constructor enforces the desk-scale range 2 <= p <= 13 that the
// enumeration machinery is sized for; unguarded() skips the range check (but
// never the primality check) for callers that explicitly lift the guards.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : PrimeField(p, /*lift_guard=*/false) {}

    static PrimeField unguarded(std::uint32_t p) { return PrimeField(p, true); }

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Residue>(r);
    }

    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    Residue sub(Residue a, Residue b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }

    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }

    Residue pow(Residue a, std::uint64_t e) const noexcept {
        Residue base = a % p_, r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Fermat inverse; p is prime by construction.
    Residue inv(Residue a) const {
        if (a % p_ == 0) throw Singular("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

private:
    PrimeField(std::uint32_t p, bool lift_guard) : p_(p) {
        if (!is_prime(p))
            throw InvalidField("p must be prime, got " + std::to_string(p));
        if (!lift_guard && p > 13)
            throw InvalidField("p = " + std::to_string(p) +
                               " exceeds the default guard p <= 13 "
                               "(use the unguarded constructor to lift it)");
        if (p > (1u << 15))
            throw InvalidField("p too large for exact 64-bit arithmetic paths");
    }

    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a != b) throw DimensionMismatch("mixed prime fields");
}

}  // namespace brpic
