#pragma once

#include "syzlab/resolution.hpp"

namespace syzlab {

// Hom(F, N) and F (x) N for free F are identified with N^rank; the maps
// induced by a differential act on free covers of those copies. Coordinates
// are laid out block-major: (block, generator of N) -> block * rN + gen.

// Free-cover columns of Hom(d, N): N^{rows(d)} -> N^{ncols(d)}, the transpose
// action.
inline std::vector<FreeVector> hom_map_columns(const SparseMat& d, std::size_t rN,
                                               const PrimeField& F)
{
    std::vector<std::vector<FreeVector::Entry>> acc(d.rows * rN);
    for (std::uint32_t c = 0; c < d.ncols(); ++c) {
        for (const auto& [l, p] : d.cols[c].entries())
            for (std::uint32_t g = 0; g < rN; ++g)
                acc[static_cast<std::size_t>(l) * rN + g].emplace_back(
                    c * static_cast<std::uint32_t>(rN) + g, p);
    }
    std::vector<FreeVector> out;
    out.reserve(acc.size());
    for (auto& es : acc) out.push_back(FreeVector::collect(std::move(es), F));
    return out;
}

// Free-cover columns of d (x) N: N^{ncols(d)} -> N^{rows(d)}.
inline std::vector<FreeVector> tensor_map_columns(const SparseMat& d, std::size_t rN)
{
    std::vector<FreeVector> out;
    out.reserve(d.ncols() * rN);
    for (std::uint32_t l = 0; l < d.ncols(); ++l) {
        for (std::uint32_t g = 0; g < rN; ++g) {
            std::vector<FreeVector::Entry> es;
            for (const auto& [a, p] : d.cols[l].entries())
                es.emplace_back(a * static_cast<std::uint32_t>(rN) + g, p);
            out.push_back(FreeVector::from_sorted(std::move(es)));
        }
    }
    return out;
}

// Relations of N replicated across the given number of blocks.
inline std::vector<FreeVector> block_relations(const ModulePresentation& N, std::size_t blocks)
{
    std::vector<FreeVector> rel = N.relation_columns();
    std::size_t rN = N.generators();
    std::vector<FreeVector> out;
    out.reserve(blocks * rel.size());
    for (std::uint32_t a = 0; a < blocks; ++a)
        for (const auto& r : rel) {
            std::vector<FreeVector::Entry> es;
            for (const auto& e : r.entries())
                es.emplace_back(a * static_cast<std::uint32_t>(rN) + e.first, e.second);
            out.push_back(FreeVector::from_sorted(std::move(es)));
        }
    return out;
}

// Twists of the N^blocks cover: Hom flips the sign of the block twist,
// tensoring keeps it.
inline std::optional<std::vector<int>> cover_twists(const std::optional<std::vector<int>>& block_tw,
                                                    const std::optional<std::vector<int>>& n_degs,
                                                    bool hom)
{
    if (!block_tw || !n_degs) return std::nullopt;
    std::vector<int> out;
    out.reserve(block_tw->size() * n_degs->size());
    for (int bt : *block_tw)
        for (int nd : *n_degs) out.push_back(hom ? nd - bt : nd + bt);
    return out;
}

// Kernel of the map given by cols : R^{#cols} -> R^rows taken modulo the
// span of the target relations; returns a minimal generating set.
inline std::vector<FreeVector> kernel_mod_relations(const std::vector<FreeVector>& cols,
                                                    std::vector<FreeVector> target_rels,
                                                    std::size_t rows, const Ring& R,
                                                    const std::optional<std::vector<int>>& src_twists)
{
    const PrimeField& F = R.field();
    std::size_t c = cols.size();
    if (c == 0) return {};
    std::vector<FreeVector> full = cols;
    for (auto& r : target_rels) full.push_back(std::move(r));
    QuotientRun qr(full, rows, R);
    std::vector<FreeVector> proj;
    for (const auto& cand : qr.kernel_candidates()) {
        FreeVector v = restrict_components(cand, static_cast<std::uint32_t>(c));
        if (!v.is_zero()) proj.push_back(std::move(v));
    }
    std::optional<std::vector<int>> degs;
    if (src_twists) degs = column_degrees(proj, *src_twists);
    std::vector<FreeVector> kept =
        minimal_generators(proj, degs, c, ideal_generators(R), F);
    for (auto& v : kept) v = detail::monic(std::move(v), F);
    return kept;
}

// Ext^i(M, N) = ker(Hom(d_i+1, N)) / im(Hom(d_i, N)) as a presented
// subquotient of N^{b_i}.
inline ModulePresentation ext_presentation(Resolution& resM, const ModulePresentation& N,
                                           std::size_t i, std::string label = "",
                                           bool minimalize = true)
{
    resM.extend(i + 1);
    const RingPtr& ring = N.ring();
    const PrimeField& F = ring->field();
    std::size_t rN = N.generators();
    std::size_t bi = resM.betti(i);
    if (rN == 0 || bi == 0) return zero_module(ring, label);
    std::size_t src_rank = bi * rN;

    auto src_twists = cover_twists(resM.twists(i), N.gen_degrees(), true);

    std::vector<FreeVector> ker_cols = hom_map_columns(resM.diff(i + 1), rN, F);
    std::vector<FreeVector> gens =
        kernel_mod_relations(ker_cols, block_relations(N, resM.betti(i + 1)),
                             resM.betti(i + 1) * rN, *ring, src_twists);

    std::vector<FreeVector> rels;
    if (i > 0)
        for (auto& v : hom_map_columns(resM.diff(i), rN, F)) rels.push_back(std::move(v));
    for (auto& v : block_relations(N, bi)) rels.push_back(std::move(v));

    return present_subquotient(ring, std::move(gens), std::move(rels), src_rank, src_twists,
                               std::move(label), minimalize);
}

// Tor_i(M, N) = ker(d_i (x) N) / im(d_i+1 (x) N) as a presented subquotient
// of N^{b_i}.
inline ModulePresentation tor_presentation(Resolution& resM, const ModulePresentation& N,
                                           std::size_t i, std::string label = "",
                                           bool minimalize = true)
{
    resM.extend(i + 1);
    const RingPtr& ring = N.ring();
    std::size_t rN = N.generators();
    std::size_t bi = resM.betti(i);
    if (rN == 0 || bi == 0) return zero_module(ring, label);
    std::size_t src_rank = bi * rN;

    auto src_twists = cover_twists(resM.twists(i), N.gen_degrees(), false);

    std::vector<FreeVector> rels = tensor_map_columns(resM.diff(i + 1), rN);
    for (auto& v : block_relations(N, bi)) rels.push_back(std::move(v));

    if (i == 0) {
        // Right-exactness: Tor_0 = M (x) N presented directly.
        return make_presentation(ring, columns_to_matrix(rels, src_rank), src_twists,
                                 std::move(label), minimalize);
    }

    std::vector<FreeVector> ker_cols = tensor_map_columns(resM.diff(i), rN);
    std::vector<FreeVector> gens =
        kernel_mod_relations(ker_cols, block_relations(N, resM.betti(i - 1)),
                             resM.betti(i - 1) * rN, *ring, src_twists);

    return present_subquotient(ring, std::move(gens), std::move(rels), src_rank, src_twists,
                               std::move(label), minimalize);
}

}  // namespace syzlab
