#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzlab/io.hpp"
#include "syzlab/syzygy.hpp"

namespace syzlab {

// k-dimension that may be infinite.
using Dim = std::optional<std::uint64_t>;

inline std::string dim_str(const Dim& d) { return d ? std::to_string(*d) : "INFINITE"; }

inline std::vector<FreeVector> matrix_columns(const PolyMatrix& m)
{
    std::vector<FreeVector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<FreeVector::Entry> es;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) es.emplace_back(static_cast<std::uint32_t>(i), m.at(i, j));
        cols.push_back(FreeVector::from_sorted(std::move(es)));
    }
    return cols;
}

inline PolyMatrix columns_to_matrix(const std::vector<FreeVector>& cols, std::size_t rows)
{
    PolyMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& e : cols[j].entries()) m.at(e.first, j) = e.second;
    return m;
}

// Finite presentation of an R-module M = R^r / column span of the relations
// matrix. Presentations are stored minimally: no relation entry has a nonzero
// constant term, and the relation columns are an irredundant generating set.
class ModulePresentation {
public:
    ModulePresentation() = default;

    const RingPtr& ring() const { return ring_; }
    const PolyMatrix& relations() const { return rel_; }
    std::size_t generators() const { return rel_.rows(); }
    std::size_t nrels() const { return rel_.cols(); }
    const std::optional<std::vector<int>>& gen_degrees() const { return gen_degrees_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool is_zero_module() const { return rel_.rows() == 0; }

    std::vector<FreeVector> relation_columns() const { return matrix_columns(rel_); }

    std::string content_key() const
    {
        std::string s = to_hex64(ring_->hash()) + " r=" + std::to_string(rel_.rows()) + " deg=";
        if (gen_degrees_) {
            for (int d : *gen_degrees_) s += std::to_string(d) + ",";
        } else {
            s += "?";
        }
        s += " rel=" + print_matrix(rel_, ring_->desc().vars);
        return s;
    }

    std::uint64_t hash() const { return hash_; }

    bool operator==(const ModulePresentation& o) const
    {
        return hash_ == o.hash_ && rel_ == o.rel_ && gen_degrees_ == o.gen_degrees_;
    }

    friend ModulePresentation make_presentation(RingPtr ring, PolyMatrix rel,
                                                std::optional<std::vector<int>> degrees,
                                                std::string label, bool minimalize);

private:
    RingPtr ring_;
    PolyMatrix rel_;
    std::optional<std::vector<int>> gen_degrees_;
    std::string label_;
    std::uint64_t hash_ = 0;
};

// Pivots away relation entries that are units in the graded-local sense and
// prunes the relation columns to an irredundant generating set. Column
// operations are exact over R: other columns are scaled by the pivot entry
// rather than divided by it.
inline ModulePresentation make_presentation(RingPtr ring, PolyMatrix rel,
                                            std::optional<std::vector<int>> degrees,
                                            std::string label = "", bool minimalize = true)
{
    const Ring& R = *ring;
    const PrimeField& F = R.field();
    if (degrees && degrees->size() != rel.rows())
        throw Error(Errc::internal, "generator degree list does not match presentation rows");

    for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j) rel.at(i, j) = R.nf(rel.at(i, j));

    if (minimalize) {
        for (;;) {
            std::size_t pl = rel.rows(), pj = rel.cols();
            for (std::size_t l = 0; l < rel.rows() && pl == rel.rows(); ++l)
                for (std::size_t j = 0; j < rel.cols(); ++j)
                    if (rel.at(l, j).constant_term() != 0) {
                        pl = l;
                        pj = j;
                        break;
                    }
            if (pl == rel.rows()) break;
            Polynomial u = rel.at(pl, pj);
            for (std::size_t j = 0; j < rel.cols(); ++j) {
                if (j == pj) continue;
                const Polynomial a = rel.at(pl, j);
                if (a.is_zero()) continue;
                for (std::size_t i = 0; i < rel.rows(); ++i) {
                    Polynomial t = sub(mul(u, rel.at(i, j), F), mul(a, rel.at(i, pj), F), F);
                    rel.at(i, j) = R.nf(t);
                }
            }
            // Delete generator pl and relation pj.
            PolyMatrix next(rel.rows() - 1, rel.cols() - 1);
            for (std::size_t i = 0, ii = 0; i < rel.rows(); ++i) {
                if (i == pl) continue;
                for (std::size_t j = 0, jj = 0; j < rel.cols(); ++j) {
                    if (j == pj) continue;
                    next.at(ii, jj) = std::move(rel.at(i, j));
                    ++jj;
                }
                ++ii;
            }
            rel = std::move(next);
            if (degrees) degrees->erase(degrees->begin() + static_cast<std::ptrdiff_t>(pl));
        }

        // Irredundant relation columns.
        std::vector<FreeVector> cols;
        for (auto& c : matrix_columns(rel))
            if (!c.is_zero()) cols.push_back(std::move(c));
        std::optional<std::vector<int>> col_degs;
        if (degrees) col_degs = column_degrees(cols, *degrees);
        std::vector<FreeVector> kept =
            minimal_generators(cols, col_degs, rel.rows(), ideal_generators(R), F);
        for (auto& c : kept) c = detail::monic(std::move(c), F);
        std::sort(kept.begin(), kept.end(),
                  [](const FreeVector& a, const FreeVector& b) { return freevec_cmp(a, b) > 0; });
        rel = columns_to_matrix(kept, rel.rows());
    }

    ModulePresentation P;
    P.ring_ = std::move(ring);
    P.rel_ = std::move(rel);
    P.gen_degrees_ = std::move(degrees);
    P.label_ = std::move(label);
    P.hash_ = fnv1a64(P.content_key());
    return P;
}

// Re-minimalizes a presentation; a no-op on stored modules, exposed for
// callers holding raw matrices.
inline ModulePresentation minimal_presentation(const ModulePresentation& P)
{
    return make_presentation(P.ring(), P.relations(), P.gen_degrees(), P.label(), true);
}

inline ModulePresentation zero_module(RingPtr ring, std::string label = "0")
{
    return make_presentation(std::move(ring), PolyMatrix(0, 0), std::vector<int>{}, std::move(label));
}

inline ModulePresentation free_module(RingPtr ring, std::size_t n, std::string label = "")
{
    if (label.empty()) label = "free(" + std::to_string(n) + ")";
    return make_presentation(std::move(ring), PolyMatrix(n, 0), std::vector<int>(n, 0),
                             std::move(label));
}

inline ModulePresentation residue_field(RingPtr ring)
{
    std::size_t nv = ring->nvars();
    PolyMatrix rel(1, nv);
    for (std::size_t v = 0; v < nv; ++v) rel.at(0, v) = Polynomial::term(Monomial::var(nv, v), 1);
    return make_presentation(std::move(ring), std::move(rel), std::vector<int>{0}, "k");
}

inline ModulePresentation direct_sum_module(const ModulePresentation& a, const ModulePresentation& b,
                                            std::string label = "")
{
    if (a.ring()->hash() != b.ring()->hash())
        throw Error(Errc::internal, "direct sum across different rings");
    std::optional<std::vector<int>> degs;
    if (a.gen_degrees() && b.gen_degrees()) {
        degs = *a.gen_degrees();
        degs->insert(degs->end(), b.gen_degrees()->begin(), b.gen_degrees()->end());
    }
    if (label.empty()) label = "dsum(" + a.label() + "," + b.label() + ")";
    return make_presentation(a.ring(), direct_sum(a.relations(), b.relations()), std::move(degs),
                             std::move(label));
}

// Presentation of span(gens)/span(rels) inside R^ambient_rank: each relation
// is expressed over the generators by division lift, and the syzygies of the
// generators over R are appended.
inline ModulePresentation present_subquotient(RingPtr ring, std::vector<FreeVector> gens,
                                              std::vector<FreeVector> rels, std::size_t ambient_rank,
                                              const std::optional<std::vector<int>>& ambient_twists,
                                              std::string label = "", bool minimalize = true)
{
    const Ring& R = *ring;
    for (auto& g : gens) g = R.nf_vec(g);
    for (auto& r : rels) r = R.nf_vec(r);

    std::optional<std::vector<int>> gen_degs;
    if (ambient_twists) gen_degs = column_degrees(gens, *ambient_twists);

    if (gens.empty()) {
        for (const auto& r : rels)
            if (!r.is_zero()) throw Error(Errc::rel_not_in_span, "relation outside zero span");
        return make_presentation(std::move(ring), PolyMatrix(0, 0), std::vector<int>{},
                                 std::move(label));
    }

    QuotientRun qr(gens, ambient_rank, R);
    std::vector<FreeVector> relcols;
    for (const auto& r : rels) {
        if (r.is_zero()) continue;
        auto c = qr.express(r);
        if (!c) throw Error(Errc::rel_not_in_span, "relation is not in the span of the generators");
        if (!c->is_zero()) relcols.push_back(std::move(*c));
    }
    KernelResult syz = finish_kernel(qr.kernel_candidates(), gens, R, ambient_twists, minimalize);
    for (auto& s : syz.gens) relcols.push_back(std::move(s));

    return make_presentation(std::move(ring), columns_to_matrix(relcols, gens.size()),
                             std::move(gen_degs), std::move(label), minimalize);
}

inline ModulePresentation ideal_module(RingPtr ring, const std::vector<Polynomial>& gens,
                                       std::string label = "")
{
    std::vector<FreeVector> vs;
    for (const auto& g : gens) vs.push_back(FreeVector::single(0, g));
    return present_subquotient(std::move(ring), std::move(vs), {}, 1, std::vector<int>{0},
                               std::move(label));
}

inline ModulePresentation cokernel_module(RingPtr ring, const PolyMatrix& m, std::string label = "")
{
    return make_presentation(std::move(ring), m, std::vector<int>(m.rows(), 0), std::move(label));
}

// dim_k of the presented module via standard monomial counting over S.
inline Dim module_dim_k(const ModulePresentation& P)
{
    const Ring& R = *P.ring();
    if (P.generators() == 0) return Dim(0);
    std::vector<FreeVector> gens = P.relation_columns();
    for (std::uint32_t i = 0; i < P.generators(); ++i)
        for (const auto& g : R.ideal_gb().generators())
            gens.push_back(FreeVector::single(i, g.entries().front().second));
    GroebnerBasis gb = buchberger(gens, P.generators(), R.field());
    return std_monomial_count(gb, R.nvars());
}

}  // namespace syzlab
