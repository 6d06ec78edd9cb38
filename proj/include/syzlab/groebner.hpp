#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "syzlab/freevec.hpp"

namespace syzlab {

// Index of basis elements by leading component, in insertion order. Division
// always picks the earliest listed divisor, which keeps every computation
// reproducible bit for bit.
class DivisorBuckets {
public:
    void add(std::uint32_t comp, std::uint32_t idx) { map_[comp].push_back(idx); }

    const std::vector<std::uint32_t>* get(std::uint32_t comp) const
    {
        auto it = map_.find(comp);
        return it == map_.end() ? nullptr : &it->second;
    }

    void clear() { map_.clear(); }

private:
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> map_;
};

struct DivisionResult {
    FreeVector remainder;
    // Quotients sorted by basis index: v = sum q_k * basis[k] + remainder.
    std::vector<std::pair<std::uint32_t, Polynomial>> quotients;
};

// Module division algorithm. Reduces the highest remaining term first; terms
// with no divisor move to the remainder. Basis elements must be monic.
inline DivisionResult divide(FreeVector v, const std::vector<FreeVector>& basis,
                             const DivisorBuckets& buckets, bool want_quotients,
                             const PrimeField& F)
{
    DivisionResult res;
    std::vector<std::pair<std::uint32_t, Term>> steps;
    while (!v.is_zero()) {
        ModTerm t = v.leading();
        const std::vector<std::uint32_t>* bucket = buckets.get(t.comp);
        bool reduced = false;
        if (bucket) {
            for (std::uint32_t idx : *bucket) {
                const FreeVector& g = basis[idx];
                const Monomial& glm = g.entries().front().second.lm();
                if (divides(glm, t.mono)) {
                    Monomial q = quotient(t.mono, glm);
                    v = axpy_term(v, F.neg(t.coeff), q, g, F);
                    if (want_quotients) steps.push_back({idx, Term{std::move(q), t.coeff}});
                    reduced = true;
                    break;
                }
            }
        }
        if (!reduced) {
            res.remainder.push_back_term(t.comp, t.mono, t.coeff);
            v.pop_leading();
        }
    }
    if (want_quotients && !steps.empty()) {
        std::sort(steps.begin(), steps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t i = 0;
        while (i < steps.size()) {
            std::size_t j = i;
            std::vector<Term> ts;
            while (j < steps.size() && steps[j].first == steps[i].first)
                ts.push_back(std::move(steps[j++].second));
            res.quotients.emplace_back(steps[i].first, Polynomial::collect(std::move(ts), F));
            i = j;
        }
    }
    return res;
}

namespace detail {

struct PairKey {
    std::uint32_t deg;
    std::uint32_t comp;
    std::uint32_t i;
    std::uint32_t j;

    bool operator>(const PairKey& o) const
    {
        return std::tie(deg, comp, i, j) > std::tie(o.deg, o.comp, o.i, o.j);
    }
};

using PairQueue = std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>>;

}  // namespace detail

// Buchberger working set with full pair saturation. No pair criteria are
// applied beyond the same-component requirement, so the processed pairs are
// exactly the ones Schreyer's theorem consumes.
class IncrementalGB {
public:
    explicit IncrementalGB(const PrimeField& F) : F_(F) {}

    const std::vector<FreeVector>& elements() const { return basis_; }
    const PrimeField& field() const { return F_; }

    FreeVector nf(const FreeVector& v) const
    {
        return divide(v, basis_, buckets_, false, F_).remainder;
    }

    bool contains(const FreeVector& v) const { return nf(v).is_zero(); }

    // Inserts the normal form of v (if nonzero) and restores the basis property.
    void add(const FreeVector& v)
    {
        FreeVector r = nf(v);
        if (r.is_zero()) return;
        insert(std::move(r));
        saturate();
    }

    // Returns false when v already lies in the span.
    bool add_if_new(const FreeVector& v)
    {
        FreeVector r = nf(v);
        if (r.is_zero()) return false;
        insert(std::move(r));
        saturate();
        return true;
    }

    void add_all(const std::vector<FreeVector>& vs)
    {
        for (const auto& v : vs) {
            FreeVector r = nf(v);
            if (!r.is_zero()) insert(std::move(r));
        }
        saturate();
    }

private:
    void insert(FreeVector g)
    {
        Coeff c = g.leading().coeff;
        if (c != 1) g = scale(g, F_.inv(c), F_);
        std::uint32_t idx = static_cast<std::uint32_t>(basis_.size());
        std::uint32_t comp = g.leading_comp();
        const Monomial& lm = g.entries().front().second.lm();
        if (const auto* bucket = buckets_.get(comp)) {
            for (std::uint32_t k : *bucket) {
                const Monomial& other = basis_[k].entries().front().second.lm();
                pairs_.push({lcm(lm, other).degree(), comp, k, idx});
            }
        }
        basis_.push_back(std::move(g));
        buckets_.add(comp, idx);
    }

    void saturate()
    {
        while (!pairs_.empty()) {
            detail::PairKey pk = pairs_.top();
            pairs_.pop();
            const FreeVector& gi = basis_[pk.i];
            const FreeVector& gj = basis_[pk.j];
            const Monomial& mi = gi.entries().front().second.lm();
            const Monomial& mj = gj.entries().front().second.lm();
            Monomial m = lcm(mi, mj);
            FreeVector s = axpy_term(FreeVector(), 1, quotient(m, mi), gi, F_);
            s = axpy_term(s, F_.neg(1), quotient(m, mj), gj, F_);
            FreeVector r = nf(s);
            if (!r.is_zero()) insert(std::move(r));
        }
    }

    PrimeField F_;
    std::vector<FreeVector> basis_;
    DivisorBuckets buckets_;
    detail::PairQueue pairs_;
};

// Reduced Groebner basis of a submodule of S^b under POT-over-degrevlex.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    GroebnerBasis(std::size_t ambient_rank, std::vector<FreeVector> gens, bool reduced)
        : ambient_rank_(ambient_rank), gens_(std::move(gens)), reduced_(reduced)
    {
        for (std::uint32_t k = 0; k < gens_.size(); ++k)
            buckets_.add(gens_[k].leading_comp(), k);
    }

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<FreeVector>& generators() const { return gens_; }
    bool reduced() const { return reduced_; }
    bool empty() const { return gens_.empty(); }

    FreeVector nf(const FreeVector& v, const PrimeField& F) const
    {
        return divide(v, gens_, buckets_, false, F).remainder;
    }

    DivisionResult divide_tracked(FreeVector v, const PrimeField& F) const
    {
        return divide(std::move(v), gens_, buckets_, true, F);
    }

    bool contains(const FreeVector& v, const PrimeField& F) const { return nf(v, F).is_zero(); }

    bool operator==(const GroebnerBasis& o) const
    {
        return ambient_rank_ == o.ambient_rank_ && gens_ == o.gens_;
    }

private:
    std::size_t ambient_rank_ = 0;
    std::vector<FreeVector> gens_;
    DivisorBuckets buckets_;
    bool reduced_ = false;
};

// Buchberger's algorithm followed by autoreduction; the result is the unique
// reduced basis, independent of generator order.
inline GroebnerBasis buchberger(const std::vector<FreeVector>& gens, std::size_t ambient_rank,
                                const PrimeField& F)
{
    IncrementalGB work(F);
    work.add_all(gens);
    const std::vector<FreeVector>& raw = work.elements();

    // Minimalize: drop any element whose leading term another one divides.
    std::vector<bool> keep(raw.size(), true);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (raw[i].leading_comp() != raw[j].leading_comp()) continue;
            const Monomial& mi = raw[i].entries().front().second.lm();
            const Monomial& mj = raw[j].entries().front().second.lm();
            if (divides(mj, mi) && (mi != mj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<FreeVector> mins;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (keep[i]) mins.push_back(raw[i]);

    // Tail-reduce each survivor against the others.
    for (std::size_t i = 0; i < mins.size(); ++i) {
        std::vector<FreeVector> others;
        DivisorBuckets ob;
        for (std::size_t j = 0; j < mins.size(); ++j) {
            if (j == i) continue;
            ob.add(mins[j].leading_comp(), static_cast<std::uint32_t>(others.size()));
            others.push_back(mins[j]);
        }
        FreeVector r = divide(mins[i], others, ob, false, F).remainder;
        Coeff c = r.leading().coeff;
        mins[i] = (c == 1) ? std::move(r) : scale(r, F.inv(c), F);
    }

    std::sort(mins.begin(), mins.end(), [](const FreeVector& a, const FreeVector& b) {
        const auto& ta = a.leading();
        const auto& tb = b.leading();
        return pot_cmp(ta.comp, ta.mono, tb.comp, tb.mono) > 0;
    });
    return GroebnerBasis(ambient_rank, std::move(mins), true);
}

inline GroebnerBasis buchberger_ideal(const std::vector<Polynomial>& gens, const PrimeField& F)
{
    std::vector<FreeVector> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) vs.push_back(FreeVector::single(0, g));
    return buchberger(vs, 1, F);
}

// Normal form against a Groebner basis; the public reduction operation.
inline FreeVector normal_form(const FreeVector& v, const GroebnerBasis& G, const PrimeField& F)
{
    return G.nf(v, F);
}

constexpr std::uint64_t kStdCountCap = 50'000'000;

// Number of standard monomial/basis-vector pairs outside the leading term
// module; nullopt means the count is infinite.
inline std::optional<std::uint64_t> std_monomial_count(const GroebnerBasis& G, std::size_t nvars)
{
    std::vector<std::vector<Monomial>> per_comp(G.ambient_rank());
    for (const auto& g : G.generators()) {
        if (g.leading_comp() < per_comp.size())
            per_comp[g.leading_comp()].push_back(g.entries().front().second.lm());
    }
    std::uint64_t total = 0;
    for (const auto& lms : per_comp) {
        bool killed = false;
        for (const auto& m : lms)
            if (m.is_one()) killed = true;  // unit leading term: component dies
        if (killed) continue;
        if (nvars == 0) {
            total += 1;
            continue;
        }
        // Finite iff every variable has a pure power among the leading terms.
        std::vector<std::uint64_t> box(nvars, 0);
        for (std::size_t v = 0; v < nvars; ++v) {
            std::uint32_t best = 0;
            bool found = false;
            for (const auto& m : lms) {
                if (m.exp(v) == m.degree() && m.degree() > 0) {
                    if (!found || m.exp(v) < best) best = m.exp(v);
                    found = true;
                }
            }
            if (!found) return std::nullopt;
            box[v] = best;
        }
        std::uint64_t cells = 1;
        for (auto d : box) {
            cells *= d;
            if (cells > kStdCountCap)
                throw Error(Errc::internal, "standard monomial enumeration box too large");
        }
        std::vector<std::uint32_t> e(nvars, 0);
        for (std::uint64_t cell = 0; cell < cells; ++cell) {
            std::uint64_t rest = cell;
            for (std::size_t v = 0; v < nvars; ++v) {
                e[v] = static_cast<std::uint32_t>(rest % box[v]);
                rest /= box[v];
            }
            bool standard = true;
            for (const auto& m : lms) {
                bool div = true;
                for (std::size_t v = 0; v < nvars; ++v)
                    if (m.exp(v) > e[v]) {
                        div = false;
                        break;
                    }
                if (div) {
                    standard = false;
                    break;
                }
            }
            if (standard) ++total;
        }
    }
    return total;
}

// Standard monomials themselves (finite case), sorted ascending in degrevlex;
// this is the only ingredient the brute-force verifier shares with the
// Groebner pipeline.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G, std::size_t nvars)
{
    if (G.ambient_rank() != 1)
        throw Error(Errc::internal, "standard_monomials expects an ideal basis");
    std::vector<Monomial> lms;
    for (const auto& g : G.generators()) lms.push_back(g.entries().front().second.lm());
    for (const auto& m : lms)
        if (m.is_one()) return {};
    std::vector<std::uint32_t> box(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        std::uint32_t best = 0;
        bool found = false;
        for (const auto& m : lms) {
            if (m.exp(v) == m.degree() && m.degree() > 0) {
                if (!found || m.exp(v) < best) best = m.exp(v);
                found = true;
            }
        }
        if (!found) throw Error(Errc::not_artinian, "quotient ring has infinite dimension");
        box[v] = best;
    }
    std::uint64_t cells = 1;
    for (auto d : box) {
        cells *= d;
        if (cells > kStdCountCap)
            throw Error(Errc::internal, "standard monomial enumeration box too large");
    }
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
        std::uint64_t rest = cell;
        for (std::size_t v = 0; v < nvars; ++v) {
            e[v] = static_cast<std::uint32_t>(rest % box[v]);
            rest /= box[v];
        }
        Monomial m{std::vector<std::uint32_t>(e.begin(), e.end())};
        bool standard = true;
        for (const auto& g : lms)
            if (divides(g, m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), degrevlex_less);
    return out;
}

// Krull dimension of S/I from the leading term ideal: the largest set of
// variables containing no generator's support.
inline int krull_dimension(const GroebnerBasis& ideal_gb, std::size_t nvars)
{
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : ideal_gb.generators()) {
        const Monomial& m = g.entries().front().second.lm();
        if (m.is_one()) return -1;  // unit ideal: zero ring
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < nvars; ++v)
            if (m.exp(v) > 0) s.push_back(v);
        supports.push_back(std::move(s));
    }
    if (nvars > 31) throw Error(Errc::internal, "too many variables for subset enumeration");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& s : supports) {
            bool inside = true;
            for (std::size_t v : s)
                if (!(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace syzlab
