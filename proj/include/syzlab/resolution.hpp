#pragma once

#include <vector>

#include "syzlab/presentation.hpp"

namespace syzlab {

// Column-sparse matrix over R. Resolution differentials at depth reach ranks
// in the thousands, where a dense polynomial matrix would not fit; the dense
// PolyMatrix stays in use for presentation-sized data.
struct SparseMat {
    std::size_t rows = 0;
    std::vector<FreeVector> cols;

    std::size_t ncols() const { return cols.size(); }
};

inline SparseMat sparse_from(const PolyMatrix& m)
{
    return SparseMat{m.rows(), matrix_columns(m)};
}

inline PolyMatrix dense_from(const SparseMat& m)
{
    return columns_to_matrix(m.cols, m.rows);
}

// Minimal free resolution of a presented module, truncated on demand and
// extendable. Each step takes the minimal generators of the kernel of the
// last differential; for graded input the Betti numbers read off the ranks.
class Resolution {
public:
    explicit Resolution(const ModulePresentation& P) : ring_(P.ring()), b0_(P.generators())
    {
        twists_.push_back(P.gen_degrees());
        push_diff(SparseMat{b0_, P.relation_columns()});
    }

    static Resolution from_parts(RingPtr ring, std::size_t b0,
                                 std::vector<std::optional<std::vector<int>>> twists,
                                 std::vector<SparseMat> diffs, bool minimal)
    {
        Resolution r;
        r.ring_ = std::move(ring);
        r.b0_ = b0;
        r.twists_ = std::move(twists);
        r.diffs_ = std::move(diffs);
        r.minimal_ = minimal;
        return r;
    }

    const RingPtr& ring() const { return ring_; }

    // Largest i with the differential d_i computed.
    std::size_t computed_to() const { return diffs_.size(); }

    std::size_t betti(std::size_t i) const
    {
        if (i == 0) return b0_;
        if (i > diffs_.size()) throw Error(Errc::internal, "resolution not extended far enough");
        return diffs_[i - 1].ncols();
    }

    // d_i : R^{b_i} -> R^{b_i-1}, 1-based.
    const SparseMat& diff(std::size_t i) const
    {
        if (i == 0 || i > diffs_.size())
            throw Error(Errc::internal, "differential index out of range");
        return diffs_[i - 1];
    }

    const std::optional<std::vector<int>>& twists(std::size_t level) const
    {
        if (level >= twists_.size()) throw Error(Errc::internal, "twist level out of range");
        return twists_[level];
    }

    bool minimal() const { return minimal_; }
    bool graded() const { return static_cast<bool>(twists_.back()); }

    void extend(std::size_t N)
    {
        while (diffs_.size() < N) step();
    }

private:
    Resolution() = default;

    void push_diff(SparseMat d)
    {
        const auto& t = twists_.back();
        std::optional<std::vector<int>> next;
        if (t) next = column_degrees(d.cols, *t);
        bool has_unit = false;
        for (const auto& c : d.cols)
            for (const auto& e : c.entries())
                if (e.second.constant_term() != 0) has_unit = true;
        if (has_unit) {
            if (t && next)
                throw Error(Errc::internal, "graded resolution produced a non-minimal differential");
            minimal_ = false;
        }
        diffs_.push_back(std::move(d));
        twists_.push_back(std::move(next));
    }

    void step()
    {
        const SparseMat& d = diffs_.back();
        if (d.cols.empty()) {
            diffs_.push_back(SparseMat{0, {}});
            twists_.push_back(std::vector<int>{});
            return;
        }
        std::size_t level = diffs_.size();  // d = d_level, columns live in F_{level-1}
        KernelResult k = kernel_over_quotient(d.cols, d.rows, *ring_, twists_[level - 1]);
        push_diff(SparseMat{d.ncols(), std::move(k.gens)});
    }

    RingPtr ring_;
    std::size_t b0_ = 0;
    std::vector<SparseMat> diffs_;
    std::vector<std::optional<std::vector<int>>> twists_;  // per level 0..computed_to()
    bool minimal_ = true;
};

// Spec-facing snapshot of a resolution truncated at N.
struct FreeResolutionView {
    std::vector<std::size_t> betti;
    std::vector<const SparseMat*> differentials;  // d_1..d_N
    bool minimal = true;
    std::size_t truncated_at = 0;
};

inline FreeResolutionView view_resolution(const Resolution& r, std::size_t N)
{
    FreeResolutionView v;
    v.truncated_at = N;
    v.minimal = r.minimal();
    for (std::size_t i = 0; i <= N; ++i) v.betti.push_back(r.betti(i));
    for (std::size_t i = 1; i <= N; ++i) v.differentials.push_back(&r.diff(i));
    return v;
}

}  // namespace syzlab
