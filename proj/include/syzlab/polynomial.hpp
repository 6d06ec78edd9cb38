#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "syzlab/fp.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab {

struct Term {
    Monomial mono;
    Coeff coeff = 0;
};

// Sparse polynomial over F_p. Terms are kept strictly descending in degrevlex
// with nonzero coefficients; zero is the empty term list.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Coeff c, std::size_t nvars)
    {
        Polynomial f;
        if (c != 0) f.terms_.push_back({Monomial::one(nvars), c});
        return f;
    }

    static Polynomial term(Monomial m, Coeff c)
    {
        Polynomial f;
        if (c != 0) f.terms_.push_back({std::move(m), c});
        return f;
    }

    // Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
    static Polynomial collect(std::vector<Term> ts, const PrimeField& F)
    {
        std::sort(ts.begin(), ts.end(),
                  [](const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
        Polynomial f;
        for (auto& t : ts) {
            if (t.coeff == 0) continue;
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                f.terms_.back().coeff = F.add(f.terms_.back().coeff, t.coeff);
                if (f.terms_.back().coeff == 0) f.terms_.pop_back();
            } else {
                f.terms_.push_back(std::move(t));
            }
        }
        return f;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& lt() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().mono; }
    Coeff lc() const { return terms_.front().coeff; }

    std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    Coeff constant_term() const
    {
        if (terms_.empty()) return 0;
        const Term& last = terms_.back();
        return last.mono.is_one() ? last.coeff : 0;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    // All terms of equal total degree; the zero polynomial is homogeneous.
    bool is_homogeneous() const
    {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    // Verifies the internal invariant: strictly descending, nonzero coefficients.
    bool well_formed() const
    {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff == 0) return false;
            if (i > 0 && degrevlex_cmp(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
        }
        return true;
    }

    // Construction-time mutators used by the division algorithm.
    void pop_lt() { terms_.erase(terms_.begin()); }

    void push_back_term(Monomial m, Coeff c) { terms_.push_back({std::move(m), c}); }

    bool operator==(const Polynomial& o) const
    {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F)
    {
        return merge(a, b, 1, F);
    }

    friend Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& F)
    {
        return merge(a, b, F.neg(1), F);
    }

    friend Polynomial scale(const Polynomial& a, Coeff c, const PrimeField& F)
    {
        Polynomial r;
        if (c == 0) return r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
        return r;
    }

    friend Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c, const PrimeField& F)
    {
        Polynomial r;
        if (c == 0) return r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
        return r;
    }

    friend Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& F)
    {
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) acc.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
        return collect(std::move(acc), F);
    }

    // a + c * x^m * b, the workhorse of division and reduction.
    friend Polynomial axpy_term(const Polynomial& a, Coeff c, const Monomial& m, const Polynomial& b,
                                const PrimeField& F)
    {
        Polynomial scaled = mul_term(b, m, c, F);
        return merge(a, scaled, 1, F);
    }

    friend Polynomial neg(const Polynomial& a, const PrimeField& F) { return scale(a, F.neg(1), F); }

private:
    // a + sign * b, both well formed.
    static Polynomial merge(const Polynomial& a, const Polynomial& b, Coeff sign, const PrimeField& F)
    {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = degrevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({b.terms_[j].mono, F.mul(b.terms_[j].coeff, sign)});
                ++j;
            } else {
                Coeff v = F.add(a.terms_[i].coeff, F.mul(b.terms_[j].coeff, sign));
                if (v != 0) r.terms_.push_back({a.terms_[i].mono, v});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j)
            r.terms_.push_back({b.terms_[j].mono, F.mul(b.terms_[j].coeff, sign)});
        return r;
    }

    std::vector<Term> terms_;
};

// Total order on polynomials used for canonical sorting of generator lists:
// term-by-term on (monomial, coefficient).
inline int poly_cmp(const Polynomial& a, const Polynomial& b)
{
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = degrevlex_cmp(a.terms()[i].mono, b.terms()[i].mono);
        if (c != 0) return c;
        if (a.terms()[i].coeff != b.terms()[i].coeff)
            return a.terms()[i].coeff < b.terms()[i].coeff ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace syzlab
