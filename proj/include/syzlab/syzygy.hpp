#pragma once

#include <optional>
#include <vector>

#include "syzlab/ring.hpp"

namespace syzlab {

// Degree of a homogeneous vector of S^b under the given component twists;
// nullopt when the vector is zero or not homogeneous.
inline std::optional<int> column_degree(const FreeVector& v, const std::vector<int>& twists)
{
    std::optional<int> deg;
    for (const auto& e : v.entries()) {
        if (!e.second.is_homogeneous()) return std::nullopt;
        if (e.first >= twists.size()) return std::nullopt;
        int d = static_cast<int>(e.second.degree()) + twists[e.first];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

inline std::optional<std::vector<int>> column_degrees(const std::vector<FreeVector>& cols,
                                                      const std::vector<int>& twists)
{
    std::vector<int> out;
    out.reserve(cols.size());
    for (const auto& c : cols) {
        if (c.is_zero()) {
            out.push_back(0);
            continue;
        }
        auto d = column_degree(c, twists);
        if (!d) return std::nullopt;
        out.push_back(*d);
    }
    return out;
}

// Buchberger run with division-lift bookkeeping. Each basis element carries
// its (restricted) expression over the input generators, so a pair that
// reduces to zero hands back a syzygy of the inputs directly. Expressions are
// restricted to generator indices below track_below: restriction commutes
// with every reduction step, and callers that only want the leading block of
// the syzygies never pay for the rest.
struct TrackedRun {
    std::vector<FreeVector> basis;  // final (unreduced) Groebner basis, monic
    std::vector<FreeVector> expr;   // expr[k]: restricted expression of basis[k]
    std::vector<FreeVector> syz;    // restricted syzygies from pair reductions
    DivisorBuckets buckets;
};

inline TrackedRun tracked_buchberger(const std::vector<FreeVector>& gens, std::size_t track_below,
                                     const PrimeField& F)
{
    TrackedRun run;
    detail::PairQueue pairs;

    auto insert = [&](FreeVector g, FreeVector e) {
        Coeff c = g.leading().coeff;
        if (c != 1) {
            Coeff ci = F.inv(c);
            g = scale(g, ci, F);
            e = scale(e, ci, F);
        }
        std::uint32_t idx = static_cast<std::uint32_t>(run.basis.size());
        std::uint32_t comp = g.leading_comp();
        const Monomial& lm = g.entries().front().second.lm();
        if (const auto* bucket = run.buckets.get(comp)) {
            for (std::uint32_t k : *bucket) {
                const Monomial& other = run.basis[k].entries().front().second.lm();
                pairs.push({lcm(lm, other).degree(), comp, k, idx});
            }
        }
        run.basis.push_back(std::move(g));
        run.expr.push_back(std::move(e));
        run.buckets.add(comp, idx);
    };

    auto expr_minus_quotients = [&](FreeVector e,
                                    const std::vector<std::pair<std::uint32_t, Polynomial>>& qs) {
        for (const auto& [k, q] : qs)
            for (const auto& t : q.terms()) e = axpy_term(e, F.neg(t.coeff), t.mono, run.expr[k], F);
        return e;
    };

    for (std::uint32_t l = 0; l < gens.size(); ++l) {
        if (gens[l].is_zero()) continue;
        DivisionResult d = divide(gens[l], run.basis, run.buckets, true, F);
        std::size_t nv = gens[l].entries().front().second.lm().nvars();
        FreeVector e = l < track_below
                           ? FreeVector::single(l, Polynomial::constant(1, nv))
                           : FreeVector();
        e = expr_minus_quotients(std::move(e), d.quotients);
        if (!d.remainder.is_zero()) insert(std::move(d.remainder), std::move(e));
        // A zero remainder here is a membership relation among the inputs; it
        // reappears in the final division pass, so it is not recorded twice.
    }

    while (!pairs.empty()) {
        detail::PairKey pk = pairs.top();
        pairs.pop();
        const Monomial& mi = run.basis[pk.i].entries().front().second.lm();
        const Monomial& mj = run.basis[pk.j].entries().front().second.lm();
        Monomial m = lcm(mi, mj);
        Monomial qi = quotient(m, mi);
        Monomial qj = quotient(m, mj);
        FreeVector s = axpy_term(FreeVector(), 1, qi, run.basis[pk.i], F);
        s = axpy_term(s, F.neg(1), qj, run.basis[pk.j], F);
        DivisionResult d = divide(std::move(s), run.basis, run.buckets, true, F);
        FreeVector e = axpy_term(FreeVector(), 1, qi, run.expr[pk.i], F);
        e = axpy_term(e, F.neg(1), qj, run.expr[pk.j], F);
        e = expr_minus_quotients(std::move(e), d.quotients);
        if (d.remainder.is_zero()) {
            if (!e.is_zero()) run.syz.push_back(std::move(e));
        } else {
            insert(std::move(d.remainder), std::move(e));
        }
    }
    return run;
}

// Irredundant generating subset of span(cands) + ideal * R^rank, greedy in
// ascending degree when degrees are known. For graded input this yields a
// minimal generating set by the graded Nakayama lemma.
inline std::vector<FreeVector> minimal_generators(const std::vector<FreeVector>& cands,
                                                  const std::optional<std::vector<int>>& degrees,
                                                  std::size_t rank,
                                                  const std::vector<Polynomial>& ideal,
                                                  const PrimeField& F)
{
    std::vector<std::uint32_t> order(cands.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    if (degrees) {
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return (*degrees)[a] < (*degrees)[b];
        });
    }
    IncrementalGB gb(F);
    if (!ideal.empty()) {
        std::vector<FreeVector> aug;
        aug.reserve(rank * ideal.size());
        for (std::uint32_t c = 0; c < rank; ++c)
            for (const auto& g : ideal) aug.push_back(FreeVector::single(c, g));
        gb.add_all(aug);
    }
    std::vector<FreeVector> kept;
    for (std::uint32_t i : order) {
        if (cands[i].is_zero()) continue;
        if (gb.add_if_new(cands[i])) kept.push_back(cands[i]);
    }
    return kept;
}

namespace detail {

inline FreeVector monic(FreeVector v, const PrimeField& F)
{
    if (v.is_zero()) return v;
    Coeff c = v.leading().coeff;
    return c == 1 ? v : scale(v, F.inv(c), F);
}

// sum over entries (j, q) of s of q * cols[j].
inline FreeVector apply_columns(const FreeVector& s, const std::vector<FreeVector>& cols,
                                const PrimeField& F)
{
    FreeVector acc;
    for (const auto& [j, q] : s.entries())
        for (const auto& t : q.terms()) acc = axpy_term(acc, t.coeff, t.mono, cols[j], F);
    return acc;
}

}  // namespace detail

// Generators of the syzygy module {c in S^g : sum c_i gens_i = 0}, by
// Schreyer's theorem with division-lift bookkeeping. Output is minimalized
// (exactly minimal for homogeneous input), monic, and deterministic; the
// identity  A * s = 0  is asserted for every returned column.
inline std::vector<FreeVector> syzygies(const std::vector<FreeVector>& gens, std::size_t nvars,
                                        const PrimeField& F,
                                        const std::vector<int>* ambient_twists = nullptr,
                                        bool minimalize = true)
{
    std::size_t g = gens.size();
    if (g == 0) return {};
    TrackedRun run = tracked_buchberger(gens, g, F);

    std::vector<FreeVector> cands = std::move(run.syz);
    std::size_t nv = nvars;
    for (std::uint32_t l = 0; l < g; ++l) {
        DivisionResult d = divide(gens[l], run.basis, run.buckets, true, F);
        if (!d.remainder.is_zero())
            throw Error(Errc::internal, "generator does not reduce to zero against its own basis");
        FreeVector w = FreeVector::single(l, Polynomial::constant(1, nv));
        for (const auto& [k, q] : d.quotients)
            for (const auto& t : q.terms()) w = axpy_term(w, F.neg(t.coeff), t.mono, run.expr[k], F);
        if (!w.is_zero()) cands.push_back(std::move(w));
    }

    std::optional<std::vector<int>> degrees;
    if (minimalize) {
        std::vector<int> twists(ambient_twists ? *ambient_twists : std::vector<int>());
        std::optional<std::vector<int>> gen_degs;
        if (ambient_twists)
            gen_degs = column_degrees(gens, twists);
        else {
            // Default twists: zero on every component the generators touch.
            std::uint32_t maxc = 0;
            for (const auto& v : gens)
                for (const auto& e : v.entries()) maxc = std::max(maxc, e.first + 1);
            gen_degs = column_degrees(gens, std::vector<int>(maxc, 0));
        }
        if (gen_degs) degrees = column_degrees(cands, *gen_degs);
        cands = minimal_generators(cands, degrees, g, {}, F);
    }

    std::vector<FreeVector> out;
    out.reserve(cands.size());
    for (auto& v : cands) {
        if (v.is_zero()) continue;
        FreeVector s = detail::monic(std::move(v), F);
        if (!detail::apply_columns(s, gens, F).is_zero())
            throw Error(Errc::internal, "syzygy soundness check failed");
        out.push_back(std::move(s));
    }
    return out;
}

// A tracked run over [columns | ideal augmentation] in S^rows, with syzygy
// expressions restricted to the column block. Serves both kernel extraction
// and membership lifting over R.
class QuotientRun {
public:
    QuotientRun(std::vector<FreeVector> cols, std::size_t rows, const Ring& R)
        : cols_(std::move(cols)), ring_(&R)
    {
        std::vector<FreeVector> full = cols_;
        for (std::uint32_t i = 0; i < rows; ++i)
            for (const auto& g : R.ideal_gb().generators())
                full.push_back(FreeVector::single(i, g.entries().front().second));
        run_ = tracked_buchberger(full, cols_.size(), R.field());
        full_size_ = full.size();
        nzero_cols_ = 0;
        for (const auto& v : cols_)
            if (v.is_zero()) ++nzero_cols_;
        full_ = std::move(full);
    }

    const std::vector<FreeVector>& columns() const { return cols_; }

    // Raw generators of ker(A : R^c -> R^rows): mapped pair syzygies plus the
    // relations expressing each input over the final basis.
    std::vector<FreeVector> kernel_candidates() const
    {
        const PrimeField& F = ring_->field();
        std::size_t c = cols_.size();
        std::size_t nv = ring_->nvars();
        std::vector<FreeVector> cands;
        cands.reserve(run_.syz.size() + full_size_);
        for (const auto& s : run_.syz) {
            FreeVector v = ring_->nf_vec(s);
            if (!v.is_zero()) cands.push_back(std::move(v));
        }
        for (std::uint32_t l = 0; l < full_size_; ++l) {
            if (full_[l].is_zero()) {
                if (l < c) cands.push_back(FreeVector::single(l, Polynomial::constant(1, nv)));
                continue;
            }
            DivisionResult d = divide(full_[l], run_.basis, run_.buckets, true, F);
            if (!d.remainder.is_zero())
                throw Error(Errc::internal, "generator does not reduce to zero against its own basis");
            FreeVector w = l < c ? FreeVector::single(l, Polynomial::constant(1, nv)) : FreeVector();
            for (const auto& [k, q] : d.quotients)
                for (const auto& t : q.terms())
                    w = axpy_term(w, F.neg(t.coeff), t.mono, run_.expr[k], F);
            w = ring_->nf_vec(w);
            if (!w.is_zero()) cands.push_back(std::move(w));
        }
        return cands;
    }

    // Expresses v over the columns mod I; nullopt when v is not in the span.
    std::optional<FreeVector> express(const FreeVector& v) const
    {
        const PrimeField& F = ring_->field();
        DivisionResult d = divide(v, run_.basis, run_.buckets, true, F);
        if (!d.remainder.is_zero()) return std::nullopt;
        FreeVector w;
        for (const auto& [k, q] : d.quotients)
            for (const auto& t : q.terms()) w = axpy_term(w, t.coeff, t.mono, run_.expr[k], F);
        return ring_->nf_vec(w);
    }

private:
    std::vector<FreeVector> cols_;
    std::vector<FreeVector> full_;
    std::size_t full_size_ = 0;
    std::size_t nzero_cols_ = 0;
    const Ring* ring_;
    TrackedRun run_;
};

struct KernelResult {
    std::vector<FreeVector> gens;             // columns generating the kernel
    std::optional<std::vector<int>> degrees;  // their degrees when the input is graded
};

inline std::vector<Polynomial> ideal_generators(const Ring& R)
{
    std::vector<Polynomial> id;
    for (const auto& g : R.ideal_gb().generators()) id.push_back(g.entries().front().second);
    return id;
}

// Minimalizes, normalizes, and soundness-checks raw kernel candidates.
inline KernelResult finish_kernel(std::vector<FreeVector> cands, const std::vector<FreeVector>& cols,
                                  const Ring& R, const std::optional<std::vector<int>>& row_twists,
                                  bool minimalize)
{
    const PrimeField& F = R.field();
    KernelResult res;
    std::optional<std::vector<int>> col_degs;
    if (row_twists) col_degs = column_degrees(cols, *row_twists);
    std::optional<std::vector<int>> cand_degs;
    if (col_degs) cand_degs = column_degrees(cands, *col_degs);

    std::vector<FreeVector> kept =
        minimalize ? minimal_generators(cands, cand_degs, cols.size(), ideal_generators(R), F)
                   : std::move(cands);

    for (auto& v : kept) {
        FreeVector s = detail::monic(std::move(v), F);
        if (!R.nf_vec(detail::apply_columns(s, cols, F)).is_zero())
            throw Error(Errc::internal, "kernel soundness check failed");
        res.gens.push_back(std::move(s));
    }
    if (col_degs) res.degrees = column_degrees(res.gens, *col_degs);
    return res;
}

// Generators of ker(A : R^c -> R^r) over R = S/I, computed from S-syzygies of
// the columns of A augmented with ideal multiples of the target basis vectors.
inline KernelResult kernel_over_quotient(const std::vector<FreeVector>& cols, std::size_t rows,
                                         const Ring& R,
                                         const std::optional<std::vector<int>>& row_twists,
                                         bool minimalize = true)
{
    if (cols.empty()) return {};
    QuotientRun qr(cols, rows, R);
    return finish_kernel(qr.kernel_candidates(), cols, R, row_twists, minimalize);
}

// Generators of the module colon {v in R^b : J v ⊆ span_R(targetU)}; with an
// empty target this is the annihilator-style colon (0 : J).
inline std::vector<FreeVector> colon(const std::vector<FreeVector>& targetU, std::size_t b,
                                     const std::vector<Polynomial>& J, const Ring& R,
                                     const std::optional<std::vector<int>>& twists = std::nullopt)
{
    const PrimeField& F = R.field();
    std::size_t nv = R.nvars();
    std::size_t q = J.size();
    std::vector<FreeVector> out;
    if (q == 0) {
        for (std::uint32_t l = 0; l < b; ++l)
            out.push_back(FreeVector::single(l, Polynomial::constant(1, nv)));
        return out;
    }

    // Stacked ambient S^(b*q); block j holds the image under multiplication by J_j.
    std::vector<FreeVector> full;
    for (std::uint32_t l = 0; l < b; ++l) {
        std::vector<FreeVector::Entry> es;
        for (std::uint32_t j = 0; j < q; ++j)
            if (!J[j].is_zero()) es.emplace_back(j * b + l, J[j]);
        full.push_back(FreeVector::collect(std::move(es), F));
    }
    std::size_t c = b;
    for (std::uint32_t j = 0; j < q; ++j)
        for (const auto& u : targetU) {
            std::vector<FreeVector::Entry> es;
            for (const auto& e : u.entries()) es.emplace_back(j * b + e.first, e.second);
            full.push_back(FreeVector::collect(std::move(es), F));
        }
    for (std::uint32_t i = 0; i < b * q; ++i)
        for (const auto& g : R.ideal_gb().generators())
            full.push_back(FreeVector::single(i, g.entries().front().second));

    TrackedRun run = tracked_buchberger(full, c, F);

    std::vector<FreeVector> cands;
    for (auto& s : run.syz) {
        FreeVector v = R.nf_vec(s);
        if (!v.is_zero()) cands.push_back(std::move(v));
    }
    for (std::uint32_t l = 0; l < full.size(); ++l) {
        if (full[l].is_zero()) {
            if (l < c) cands.push_back(FreeVector::single(l, Polynomial::constant(1, nv)));
            continue;
        }
        DivisionResult d = divide(full[l], run.basis, run.buckets, true, F);
        if (!d.remainder.is_zero())
            throw Error(Errc::internal, "generator does not reduce to zero against its own basis");
        FreeVector w = l < c ? FreeVector::single(l, Polynomial::constant(1, nv)) : FreeVector();
        for (const auto& [k, qq] : d.quotients)
            for (const auto& t : qq.terms()) w = axpy_term(w, F.neg(t.coeff), t.mono, run.expr[k], F);
        w = R.nf_vec(w);
        if (!w.is_zero()) cands.push_back(std::move(w));
    }

    std::optional<std::vector<int>> cand_degs;
    if (twists) cand_degs = column_degrees(cands, *twists);
    std::vector<Polynomial> id;
    for (const auto& g : R.ideal_gb().generators()) id.push_back(g.entries().front().second);
    std::vector<FreeVector> kept = minimal_generators(cands, cand_degs, b, id, F);
    for (auto& v : kept) out.push_back(detail::monic(std::move(v), F));
    return out;
}

}  // namespace syzlab
