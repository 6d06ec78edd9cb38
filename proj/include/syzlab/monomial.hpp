#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "syzlab/error.hpp"

namespace syzlab {

// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          deg_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t(0)))
    {
    }

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1)
    {
        std::vector<std::uint32_t> v(nvars, 0);
        v[i] = e;
        return Monomial(std::move(v));
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        check_lengths(a, b);
        std::vector<std::uint32_t> v(a.exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.exps_[i] + b.exps_[i];
        return Monomial(std::move(v));
    }

    friend bool divides(const Monomial& a, const Monomial& b)
    {
        check_lengths(a, b);
        if (a.deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > b.exps_[i]) return false;
        return true;
    }

    // b / a, assuming a | b.
    friend Monomial quotient(const Monomial& b, const Monomial& a)
    {
        check_lengths(a, b);
        std::vector<std::uint32_t> v(a.exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.exps_[i] - a.exps_[i];
        return Monomial(std::move(v));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        check_lengths(a, b);
        std::vector<std::uint32_t> v(a.exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(v));
    }

private:
    static void check_lengths(const Monomial& a, const Monomial& b)
    {
        if (a.exps_.size() != b.exps_.size())
            throw Error(Errc::dimension_mismatch, "monomials over different variable sets");
    }

    std::vector<std::uint32_t> exps_;
    std::uint32_t deg_ = 0;
};

// Degree-reverse-lexicographic comparison. Returns <0, 0, >0 as a <, =, > b.
// Total degree decides first; on ties the last position where the exponents
// differ decides, with the smaller exponent there winning.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw Error(Errc::dimension_mismatch, "monomials over different variable sets");
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; }

}  // namespace syzlab
