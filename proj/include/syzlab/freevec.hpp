#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace syzlab {

// Position of a module term: component index plus monomial. The module order
// is position-over-term: lower component index dominates, degrevlex breaks
// ties inside a component.
struct ModTerm {
    std::uint32_t comp = 0;
    Monomial mono;
    Coeff coeff = 0;
};

// Returns <0, 0, >0 as a <, =, > b in the POT order.
inline int pot_cmp(std::uint32_t ca, const Monomial& ma, std::uint32_t cb, const Monomial& mb)
{
    if (ca != cb) return ca > cb ? -1 : 1;
    return degrevlex_cmp(ma, mb);
}

// Element of a free module S^b, stored sparsely as (component, polynomial)
// pairs with components strictly increasing and polynomials nonzero.
class FreeVector {
public:
    using Entry = std::pair<std::uint32_t, Polynomial>;

    FreeVector() = default;

    static FreeVector basis(std::uint32_t comp, std::size_t nvars)
    {
        FreeVector v;
        v.entries_.emplace_back(comp, Polynomial::constant(1, nvars));
        return v;
    }

    static FreeVector single(std::uint32_t comp, Polynomial p)
    {
        FreeVector v;
        if (!p.is_zero()) v.entries_.emplace_back(comp, std::move(p));
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    // Entries already strictly sorted by component with nonzero polynomials.
    static FreeVector from_sorted(std::vector<Entry> es)
    {
        FreeVector v;
        v.entries_ = std::move(es);
        return v;
    }

    // Builds from possibly unsorted entries; merges duplicates.
    static FreeVector collect(std::vector<Entry> es, const PrimeField& F)
    {
        std::sort(es.begin(), es.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        FreeVector v;
        for (auto& e : es) {
            if (e.second.is_zero()) continue;
            if (!v.entries_.empty() && v.entries_.back().first == e.first) {
                Polynomial s = add(v.entries_.back().second, e.second, F);
                if (s.is_zero())
                    v.entries_.pop_back();
                else
                    v.entries_.back().second = std::move(s);
            } else {
                v.entries_.emplace_back(std::move(e));
            }
        }
        return v;
    }

    const Polynomial& component(std::uint32_t c) const
    {
        static const Polynomial zero;
        for (const auto& e : entries_) {
            if (e.first == c) return e.second;
            if (e.first > c) break;
        }
        return zero;
    }

    // Leading module term; undefined on zero vectors.
    ModTerm leading() const
    {
        const Entry& e = entries_.front();
        return {e.first, e.second.lm(), e.second.lc()};
    }

    std::uint32_t leading_comp() const { return entries_.front().first; }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& e : entries_) n += e.second.size();
        return n;
    }

    // Drops the leading module term; entries stay well formed.
    void pop_leading()
    {
        entries_.front().second.pop_lt();
        if (entries_.front().second.is_zero()) entries_.erase(entries_.begin());
    }

    // Appends a term strictly below everything already present in POT order;
    // used to build division remainders in falling order.
    void push_back_term(std::uint32_t comp, Monomial m, Coeff c)
    {
        if (!entries_.empty() && entries_.back().first == comp) {
            entries_.back().second.push_back_term(std::move(m), c);
        } else {
            entries_.emplace_back(comp, Polynomial::term(std::move(m), c));
        }
    }

    bool operator==(const FreeVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const FreeVector& o) const { return !(*this == o); }

    friend FreeVector add(const FreeVector& a, const FreeVector& b, const PrimeField& F)
    {
        return merge(a, b, 1, Monomial(), false, F);
    }

    friend FreeVector sub(const FreeVector& a, const FreeVector& b, const PrimeField& F)
    {
        return merge(a, b, F.neg(1), Monomial(), false, F);
    }

    friend FreeVector scale(const FreeVector& a, Coeff c, const PrimeField& F)
    {
        FreeVector r;
        if (c == 0) return r;
        r.entries_.reserve(a.entries_.size());
        for (const auto& e : a.entries_) r.entries_.emplace_back(e.first, scale(e.second, c, F));
        return r;
    }

    // a + c * x^m * b.
    friend FreeVector axpy_term(const FreeVector& a, Coeff c, const Monomial& m, const FreeVector& b,
                                const PrimeField& F)
    {
        if (c == 0) return a;
        return merge(a, b, c, m, true, F);
    }

private:
    static FreeVector merge(const FreeVector& a, const FreeVector& b, Coeff c, const Monomial& m,
                            bool with_mono, const PrimeField& F)
    {
        FreeVector r;
        r.entries_.reserve(a.entries_.size() + b.entries_.size());
        std::size_t i = 0, j = 0;
        auto bpart = [&](const Polynomial& p) {
            return with_mono ? mul_term(p, m, c, F) : scale(p, c, F);
        };
        while (i < a.entries_.size() && j < b.entries_.size()) {
            if (a.entries_[i].first < b.entries_[j].first) {
                r.entries_.push_back(a.entries_[i++]);
            } else if (a.entries_[i].first > b.entries_[j].first) {
                r.entries_.emplace_back(b.entries_[j].first, bpart(b.entries_[j].second));
                ++j;
            } else {
                Polynomial s = add(a.entries_[i].second, bpart(b.entries_[j].second), F);
                if (!s.is_zero()) r.entries_.emplace_back(a.entries_[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < a.entries_.size(); ++i) r.entries_.push_back(a.entries_[i]);
        for (; j < b.entries_.size(); ++j)
            r.entries_.emplace_back(b.entries_[j].first, bpart(b.entries_[j].second));
        return r;
    }

    std::vector<Entry> entries_;
};

// Entries with component < below; the coordinate projection onto a leading
// block of the ambient free module.
inline FreeVector restrict_components(const FreeVector& v, std::uint32_t below)
{
    std::vector<FreeVector::Entry> es;
    for (const auto& e : v.entries()) {
        if (e.first >= below) break;
        es.push_back(e);
    }
    return FreeVector::from_sorted(std::move(es));
}

// Canonical comparison for sorting generator lists: by leading term in POT,
// then lexicographically on the full entry lists.
inline int freevec_cmp(const FreeVector& a, const FreeVector& b)
{
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return 0;
        return a.is_zero() ? -1 : 1;
    }
    std::size_t n = std::min(a.entries().size(), b.entries().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.entries()[i].first != b.entries()[i].first)
            return a.entries()[i].first < b.entries()[i].first ? 1 : -1;
        int c = poly_cmp(a.entries()[i].second, b.entries()[i].second);
        if (c != 0) return c;
    }
    if (a.entries().size() != b.entries().size())
        return a.entries().size() < b.entries().size() ? -1 : 1;
    return 0;
}

}  // namespace syzlab
