#pragma once

#include <cstdint>

#include "syzlab/error.hpp"

namespace syzlab {

using Coeff = std::uint32_t;

inline bool is_prime_u32(std::uint32_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic in the prime field F_p. Residues live in [0, p).
class PrimeField {
public:
    PrimeField() : p_(2) {}

    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (!is_prime_u32(p))
            throw Error(Errc::internal, "field characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const { return p_; }

    Coeff add(Coeff a, Coeff b) const
    {
        std::uint32_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }

    Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }

    Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }

    Coeff mul(Coeff a, Coeff b) const
    {
        return static_cast<Coeff>((std::uint64_t)a * b % p_);
    }

    Coeff pow(Coeff a, std::uint64_t e) const
    {
        Coeff r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Coeff inv(Coeff a) const
    {
        if (a == 0) throw Error(Errc::internal, "inverse of zero");
        return pow(a, p_ - 2);
    }

    // Maps any signed integer to its residue in [0, p).
    Coeff reduce(long long v) const
    {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<Coeff>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace syzlab
