#pragma once

#include <map>
#include <vector>

#include "syzlab/presentation.hpp"

namespace syzlab {

// Dense matrix over F_p. The brute-force verifier works entirely in this
// representation; nothing homological is shared with the Groebner pipeline.
class FpMat {
public:
    FpMat() = default;
    FpMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static FpMat identity(std::size_t n)
    {
        FpMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Coeff& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend FpMat mul(const FpMat& a, const FpMat& b, const PrimeField& F)
    {
        if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "FpMat product");
        FpMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Coeff v = a.at(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, b.at(k, j)));
            }
        return r;
    }

    std::vector<Coeff> apply(const std::vector<Coeff>& v, const PrimeField& F) const
    {
        std::vector<Coeff> r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                acc += static_cast<std::uint64_t>(at(i, j)) * v[j] % F.characteristic();
                if (acc >= (1ull << 62)) acc %= F.characteristic();
            }
            r[i] = static_cast<Coeff>(acc % F.characteristic());
        }
        return r;
    }

    bool operator==(const FpMat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    // In-place reduced row echelon form; returns the pivot column list.
    std::vector<std::size_t> rref(const PrimeField& F)
    {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            Coeff inv = F.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Coeff f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank(const PrimeField& F) const
    {
        FpMat copy = *this;
        return copy.rref(F).size();
    }

    // Basis of { v : A v = 0 } as column vectors.
    std::vector<std::vector<Coeff>> nullspace(const PrimeField& F) const
    {
        FpMat copy = *this;
        std::vector<std::size_t> pivots = copy.rref(F);
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Coeff>> out;
        for (std::size_t freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec]) continue;
            std::vector<Coeff> v(cols_, 0);
            v[freec] = 1;
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                v[pivots[pi]] = F.neg(copy.at(pi, freec));
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Coeff> e_;
};

// Solves A x = b for a fixed A with independent columns.
class FpSolver {
public:
    FpSolver(const FpMat& A, const PrimeField& F) : F_(F), ncols_(A.cols())
    {
        FpMat aug(A.rows(), A.cols() + A.rows());
        for (std::size_t i = 0; i < A.rows(); ++i) {
            for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
            aug.at(i, A.cols() + i) = 1;
        }
        pivots_ = aug.rref(F);
        std::size_t nontrivial = 0;
        for (auto p : pivots_)
            if (p < ncols_) ++nontrivial;
        if (nontrivial != ncols_)
            throw Error(Errc::internal, "FpSolver expects independent columns");
        rows_ = A.rows();
        trans_ = FpMat(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) trans_.at(i, j) = aug.at(i, ncols_ + j);
    }

    std::vector<Coeff> solve(const std::vector<Coeff>& b) const
    {
        std::vector<Coeff> u = trans_.apply(b, F_);
        std::vector<Coeff> x(ncols_, 0);
        for (std::size_t pi = 0; pi < pivots_.size() && pivots_[pi] < ncols_; ++pi)
            x[pivots_[pi]] = u[pi];
        return x;
    }

private:
    PrimeField F_;
    std::size_t ncols_ = 0;
    std::size_t rows_ = 0;
    FpMat trans_;
    std::vector<std::size_t> pivots_;
};

// R as an explicit finite-dimensional algebra: the standard monomial basis
// (the one ingredient shared with the Groebner pipeline) plus per-variable
// multiplication operators.
struct ArtinianAlgebra {
    RingPtr ring;
    std::vector<Monomial> basis;  // ascending degrevlex, basis[0] = 1
    std::vector<FpMat> mult_ops;  // one per variable

    std::size_t dim() const { return basis.size(); }

    std::size_t index_of(const Monomial& m) const
    {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == m) return i;
        throw Error(Errc::internal, "monomial outside the standard basis");
    }
};

inline ArtinianAlgebra linearize_ring(const RingPtr& ring)
{
    if (!ring->dim_k()) throw Error(Errc::not_artinian, "ring has infinite k-dimension");
    ArtinianAlgebra A;
    A.ring = ring;
    A.basis = ring->std_monomials();
    std::size_t n = A.basis.size();
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        FpMat op(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial img =
                ring->nf(Polynomial::term(A.basis[j] * Monomial::var(ring->nvars(), v), 1));
            for (const auto& t : img.terms()) op.at(A.index_of(t.mono), j) = t.coeff;
        }
        A.mult_ops.push_back(std::move(op));
    }
    return A;
}

// A finite-dimensional module given by per-variable action matrices.
struct LinearModule {
    std::size_t dim = 0;
    std::vector<FpMat> action;
    std::string label;
};

// Action of a monomial, composing variable actions along the exponents.
inline FpMat monomial_action(const LinearModule& M, const Monomial& m, const PrimeField& F)
{
    FpMat r = FpMat::identity(M.dim);
    for (std::size_t v = 0; v < m.nvars(); ++v)
        for (std::uint32_t e = 0; e < m.exp(v); ++e) r = mul(M.action[v], r, F);
    return r;
}

// Per-basis-monomial actions of one module, computed once per query.
struct ActionTable {
    std::vector<FpMat> by_basis;
};

inline ActionTable make_action_table(const ArtinianAlgebra& A, const LinearModule& M,
                                     const PrimeField& F)
{
    ActionTable t;
    t.by_basis.reserve(A.dim());
    for (const auto& m : A.basis) t.by_basis.push_back(monomial_action(M, m, F));
    return t;
}

// Action of a ring element given by its coordinates in the algebra basis.
inline FpMat element_action(const ActionTable& table, std::size_t dim,
                            const std::vector<Coeff>& coords, const PrimeField& F)
{
    FpMat r(dim, dim);
    for (std::size_t b = 0; b < coords.size(); ++b) {
        if (!coords[b]) continue;
        const FpMat& mb = table.by_basis[b];
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(coords[b], mb.at(i, j)));
    }
    return r;
}

// Realizes a presented module as a LinearModule on the standard monomial
// pairs of its relation basis; actions by normal-form multiplication.
inline LinearModule linearize(const ArtinianAlgebra& A, const ModulePresentation& M)
{
    const Ring& R = *A.ring;
    const PrimeField& F = R.field();
    std::size_t r = M.generators();
    std::vector<FreeVector> gens = M.relation_columns();
    for (std::uint32_t i = 0; i < r; ++i)
        for (const auto& g : R.ideal_gb().generators())
            gens.push_back(FreeVector::single(i, g.entries().front().second));
    GroebnerBasis gb = buchberger(gens, r, F);

    // Standard (component, monomial) pairs.
    std::vector<std::pair<std::uint32_t, Monomial>> basis;
    for (std::uint32_t c = 0; c < r; ++c) {
        std::vector<Monomial> lms;
        for (const auto& g : gb.generators())
            if (g.leading_comp() == c) lms.push_back(g.entries().front().second.lm());
        bool killed = false;
        for (const auto& m : lms)
            if (m.is_one()) killed = true;
        if (killed) continue;
        // Every variable needs a pure power for finiteness.
        std::vector<std::uint32_t> box(R.nvars(), 0);
        for (std::size_t v = 0; v < R.nvars(); ++v) {
            bool found = false;
            for (const auto& m : lms)
                if (m.exp(v) == m.degree() && m.degree() > 0 && (!found || m.exp(v) < box[v])) {
                    box[v] = m.exp(v);
                    found = true;
                }
            if (!found) throw Error(Errc::not_artinian, "module has infinite k-dimension");
        }
        std::uint64_t cells = 1;
        for (auto d : box) cells *= d;
        std::vector<std::uint32_t> e(R.nvars(), 0);
        std::vector<Monomial> std_monos;
        for (std::uint64_t cell = 0; cell < cells; ++cell) {
            std::uint64_t rest = cell;
            for (std::size_t v = 0; v < R.nvars(); ++v) {
                e[v] = static_cast<std::uint32_t>(rest % box[v]);
                rest /= box[v];
            }
            Monomial m{std::vector<std::uint32_t>(e.begin(), e.end())};
            bool standard = true;
            for (const auto& lm : lms)
                if (divides(lm, m)) {
                    standard = false;
                    break;
                }
            if (standard) std_monos.push_back(std::move(m));
        }
        std::sort(std_monos.begin(), std_monos.end(), degrevlex_less);
        for (auto& m : std_monos) basis.emplace_back(c, std::move(m));
    }

    auto index_of = [&](std::uint32_t c, const Monomial& m) -> std::size_t {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].first == c && basis[i].second == m) return i;
        throw Error(Errc::internal, "pair outside the standard basis");
    };

    LinearModule L;
    L.dim = basis.size();
    L.label = M.label();
    for (std::size_t v = 0; v < R.nvars(); ++v) {
        FpMat op(L.dim, L.dim);
        for (std::size_t j = 0; j < L.dim; ++j) {
            FreeVector img = gb.nf(
                FreeVector::single(basis[j].first,
                                   Polynomial::term(basis[j].second * Monomial::var(R.nvars(), v), 1)),
                F);
            for (const auto& entry : img.entries())
                for (const auto& t : entry.second.terms())
                    op.at(index_of(entry.first, t.mono), j) = t.coeff;
        }
        L.action.push_back(std::move(op));
    }
    return L;
}

// Minimal free resolution of a LinearModule by dense kernel computation.
// Free cover ranks come from Nakayama-style quotients M/mM; differentials
// are recorded with their entries as algebra elements.
class OracleResolution {
public:
    OracleResolution(const ArtinianAlgebra& A, LinearModule M) : A_(&A), cur_(std::move(M))
    {
        F_ = A.ring->field();
        take_cover();  // rank c_0
    }

    void extend(std::size_t N)
    {
        while (ranks_.size() <= N) take_cover();
    }

    std::size_t rank(std::size_t i)
    {
        extend(i);
        return ranks_[i];
    }

    // dim_k Ext^i(M, N) by rank-nullity on Hom(F_*, N).
    std::uint64_t ext_dim(const LinearModule& N, std::size_t i)
    {
        extend(i + 1);
        std::size_t ci = ranks_[i];
        if (ci == 0 || N.dim == 0) return 0;
        ActionTable table = make_action_table(*A_, N, F_);
        std::size_t nul = ci * N.dim - hom_matrix(N, table, i + 1).rank(F_);
        std::size_t im = i == 0 ? 0 : hom_matrix(N, table, i).rank(F_);
        return nul - im;
    }

    // dim_k Tor_i(M, N) by rank-nullity on F_* (x) N.
    std::uint64_t tor_dim(const LinearModule& N, std::size_t i)
    {
        extend(i + 1);
        std::size_t ci = ranks_[i];
        if (ci == 0 || N.dim == 0) return 0;
        ActionTable table = make_action_table(*A_, N, F_);
        std::size_t nul = ci * N.dim - (i == 0 ? 0 : tensor_matrix(N, table, i).rank(F_));
        std::size_t im = tensor_matrix(N, table, i + 1).rank(F_);
        return nul - im;
    }

private:
    // Differential entries d_i[l][j] as algebra coordinates; d_i has
    // ranks_[i-1] rows and ranks_[i] columns.
    using RingEntry = std::vector<Coeff>;

    void take_cover()
    {
        // Minimal generators: a basis of cur/m*cur, lifted greedily.
        std::size_t m = cur_.dim;
        {
            std::size_t nv = cur_.action.size();
            FpMat big(m, nv * m + m);
            for (std::size_t v = 0; v < nv; ++v)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) big.at(i, v * m + j) = cur_.action[v].at(i, j);
            // Append identity columns; pivots beyond m*nv select the lifts.
            for (std::size_t i = 0; i < m; ++i) big.at(i, nv * m + i) = 1;
            FpMat copy = big;
            std::vector<std::size_t> piv = copy.rref(F_);
            std::vector<std::vector<Coeff>> gens;
            for (std::size_t p : piv) {
                if (p < nv * m) continue;
                std::vector<Coeff> g(m, 0);
                g[p - nv * m] = 1;
                gens.push_back(std::move(g));
            }
            record_step(gens);
        }
    }

    void record_step(const std::vector<std::vector<Coeff>>& gens)
    {
        std::size_t dimA = A_->dim();
        std::size_t c = gens.size();
        // Differential entries: for steps >= 1 the current module sits inside
        // A^{c_prev}; its generators' block coordinates are ring elements.
        if (!ranks_.empty()) {
            std::size_t cprev = ranks_.back();
            std::vector<std::vector<RingEntry>> d(cprev, std::vector<RingEntry>(c));
            for (std::size_t j = 0; j < c; ++j) {
                // gens[j] in cur_ coordinates -> embedding coordinates in A^{cprev}.
                std::vector<Coeff> emb(cprev * dimA, 0);
                for (std::size_t t = 0; t < cur_.dim; ++t) {
                    if (!gens[j][t]) continue;
                    for (std::size_t s = 0; s < cprev * dimA; ++s)
                        emb[s] = F_.add(emb[s], F_.mul(gens[j][t], embedding_[t][s]));
                }
                for (std::size_t l = 0; l < cprev; ++l)
                    d[l][j] = RingEntry(emb.begin() + static_cast<std::ptrdiff_t>(l * dimA),
                                        emb.begin() + static_cast<std::ptrdiff_t>((l + 1) * dimA));
            }
            diffs_.push_back(std::move(d));
        }
        ranks_.push_back(c);

        // Cover map A^c -> cur and its kernel.
        std::size_t mdim = cur_.dim;
        FpMat phi(mdim, c * dimA);
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t b = 0; b < dimA; ++b) {
                FpMat act = monomial_action(cur_, A_->basis[b], F_);
                std::vector<Coeff> img(mdim, 0);
                for (std::size_t i = 0; i < mdim; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t t = 0; t < mdim; ++t)
                        acc += static_cast<std::uint64_t>(act.at(i, t)) * gens[j][t] %
                               F_.characteristic();
                    img[i] = static_cast<Coeff>(acc % F_.characteristic());
                }
                for (std::size_t i = 0; i < mdim; ++i) phi.at(i, j * dimA + b) = img[i];
            }
        std::vector<std::vector<Coeff>> ker = phi.nullspace(F_);

        // The kernel as the next module: restrict the block-diagonal actions.
        std::size_t kd = ker.size();
        LinearModule next;
        next.dim = kd;
        embedding_ = std::move(ker);
        if (kd == 0) {
            next.action.assign(cur_.action.size(), FpMat(0, 0));
            cur_ = std::move(next);
            return;
        }
        FpMat kbasis(c * dimA, kd);
        for (std::size_t j = 0; j < kd; ++j)
            for (std::size_t s = 0; s < c * dimA; ++s) kbasis.at(s, j) = embedding_[j][s];
        FpSolver solver(kbasis, F_);
        for (std::size_t v = 0; v < cur_.action.size(); ++v) {
            const FpMat& mv = A_->mult_ops[v];
            FpMat op(kd, kd);
            for (std::size_t j = 0; j < kd; ++j) {
                std::vector<Coeff> img(c * dimA, 0);
                for (std::size_t blk = 0; blk < c; ++blk) {
                    for (std::size_t bi = 0; bi < dimA; ++bi) {
                        std::uint64_t acc = 0;
                        for (std::size_t bj = 0; bj < dimA; ++bj)
                            acc += static_cast<std::uint64_t>(mv.at(bi, bj)) *
                                   embedding_[j][blk * dimA + bj] % F_.characteristic();
                        img[blk * dimA + bi] = static_cast<Coeff>(acc % F_.characteristic());
                    }
                }
                std::vector<Coeff> coords = solver.solve(img);
                for (std::size_t i = 0; i < kd; ++i) op.at(i, j) = coords[i];
            }
            next.action.push_back(std::move(op));
        }
        cur_ = std::move(next);
    }

    // Matrix of Hom(d_i, N) : N^{c_i-1} -> N^{c_i}.
    FpMat hom_matrix(const LinearModule& N, const ActionTable& table, std::size_t i)
    {
        const auto& d = diffs_[i - 1];
        std::size_t rows = ranks_[i] * N.dim;
        std::size_t cols = ranks_[i - 1] * N.dim;
        FpMat H(rows, cols);
        for (std::size_t j = 0; j < ranks_[i]; ++j)
            for (std::size_t l = 0; l < ranks_[i - 1]; ++l) {
                FpMat a = element_action(table, N.dim, d[l][j], F_);
                for (std::size_t r = 0; r < N.dim; ++r)
                    for (std::size_t s = 0; s < N.dim; ++s)
                        H.at(j * N.dim + r, l * N.dim + s) = a.at(r, s);
            }
        return H;
    }

    // Matrix of d_i (x) N : N^{c_i} -> N^{c_i-1}.
    FpMat tensor_matrix(const LinearModule& N, const ActionTable& table, std::size_t i)
    {
        const auto& d = diffs_[i - 1];
        std::size_t rows = ranks_[i - 1] * N.dim;
        std::size_t cols = ranks_[i] * N.dim;
        FpMat T(rows, cols);
        for (std::size_t l = 0; l < ranks_[i - 1]; ++l)
            for (std::size_t j = 0; j < ranks_[i]; ++j) {
                FpMat a = element_action(table, N.dim, d[l][j], F_);
                for (std::size_t r = 0; r < N.dim; ++r)
                    for (std::size_t s = 0; s < N.dim; ++s)
                        T.at(l * N.dim + r, j * N.dim + s) = a.at(r, s);
            }
        return T;
    }

    const ArtinianAlgebra* A_;
    PrimeField F_;
    LinearModule cur_;
    std::vector<std::vector<Coeff>> embedding_;  // current module inside A^{c_last}
    std::vector<std::size_t> ranks_;
    std::vector<std::vector<std::vector<RingEntry>>> diffs_;
};

inline std::uint64_t oracle_ext_dim(const ArtinianAlgebra& A, const LinearModule& M,
                                    const LinearModule& N, std::size_t i)
{
    OracleResolution r(A, M);
    return r.ext_dim(N, i);
}

inline std::uint64_t oracle_tor_dim(const ArtinianAlgebra& A, const LinearModule& M,
                                    const LinearModule& N, std::size_t i)
{
    OracleResolution r(A, M);
    return r.tor_dim(N, i);
}

}  // namespace syzlab
