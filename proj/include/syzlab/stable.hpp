#pragma once

#include "syzlab/engine.hpp"

namespace syzlab {

// Auslander transpose: Tr M = coker of the transposed minimal presentation.
// Generator degrees dualize to the negated relation column degrees.
inline ModulePresentation transpose_module(const ModulePresentation& M, std::string label = "")
{
    if (label.empty()) label = "Tr(" + M.label() + ")";
    std::optional<std::vector<int>> degs;
    if (M.gen_degrees()) {
        auto cd = column_degrees(M.relation_columns(), *M.gen_degrees());
        if (cd) {
            degs = *cd;
            for (int& d : *degs) d = -d;
        }
    }
    return make_presentation(M.ring(), transpose(M.relations()), std::move(degs), std::move(label));
}

// n-th syzygy, the minimal representative: presented by d_{n+1} of the
// minimal resolution.
inline ModulePresentation syzygy_module(Engine& eng, const ModulePresentation& M, std::size_t n,
                                        std::string label = "")
{
    if (n == 0) return M;
    if (label.empty()) label = "syz^" + std::to_string(n) + "(" + M.label() + ")";
    Resolution& res = eng.resolution(M, n + 1);
    return make_presentation(M.ring(), dense_from(res.diff(n + 1)), res.twists(n),
                             std::move(label));
}

// R-dual M* = ker(d_1^T : R^b0 -> R^b1), presented as a submodule.
inline ModulePresentation dual_module(const ModulePresentation& M, std::string label = "")
{
    if (label.empty()) label = "dual(" + M.label() + ")";
    const RingPtr& ring = M.ring();
    std::size_t b0 = M.generators();
    if (b0 == 0) return zero_module(ring, label);

    // Dual twists flip sign; the dual of F_1 gets the negated column degrees.
    std::optional<std::vector<int>> src_twists;  // of Hom(F_0, R) = R^b0
    std::optional<std::vector<int>> tgt_twists;  // of Hom(F_1, R) = R^g
    if (M.gen_degrees()) {
        src_twists = *M.gen_degrees();
        for (int& d : *src_twists) d = -d;
        auto cd = column_degrees(M.relation_columns(), *M.gen_degrees());
        if (cd) {
            tgt_twists = *cd;
            for (int& d : *tgt_twists) d = -d;
        }
    }

    // Columns of d_1^T are the rows of the relations matrix.
    const PolyMatrix& rel = M.relations();
    std::vector<FreeVector> cols;
    for (std::size_t i = 0; i < b0; ++i) {
        std::vector<FreeVector::Entry> es;
        for (std::size_t j = 0; j < rel.cols(); ++j)
            if (!rel.at(i, j).is_zero()) es.emplace_back(static_cast<std::uint32_t>(j), rel.at(i, j));
        cols.push_back(FreeVector::from_sorted(std::move(es)));
    }
    KernelResult k = kernel_over_quotient(cols, rel.cols(), *ring, tgt_twists, true);
    return present_subquotient(ring, std::move(k.gens), {}, b0, src_twists, std::move(label));
}

// depth M = min { i : Ext^i(k, M) != 0 }, searched up to the number of
// variables; exceeding that bound signals a bug for graded modules.
inline std::size_t module_depth(Engine& eng, const ModulePresentation& M)
{
    if (M.is_zero_module()) throw Error(Errc::zero_module, "depth of the zero module");
    return static_cast<std::size_t>(eng.memo_scalar("depth|" + eng.module_key(M), [&] {
        std::size_t cap = eng.ring().nvars();
        for (std::size_t i = 0; i <= cap; ++i)
            if (eng.bass(M, i) != 0) return static_cast<std::int64_t>(i);
        throw Error(Errc::internal, "depth search exceeded the variable count");
    }));
}

inline std::size_t ring_depth(Engine& eng) { return module_depth(eng, eng.free_one()); }

// Type r(R) = dim Ext^depth(k, R).
inline std::uint64_t ring_type(Engine& eng)
{
    return static_cast<std::uint64_t>(eng.memo_scalar("type", [&] {
        return static_cast<std::int64_t>(eng.bass(eng.free_one(), ring_depth(eng)));
    }));
}

// grade M = min { i : Ext^i(M, R) != 0 }; INFINITE (nullopt) for the zero
// module.
inline Dim module_grade(Engine& eng, const ModulePresentation& M)
{
    if (M.is_zero_module()) return std::nullopt;
    std::int64_t g = eng.memo_scalar("grade|" + eng.module_key(M), [&]() -> std::int64_t {
        std::size_t cap = eng.ring().nvars();
        for (std::size_t i = 0; i <= cap; ++i) {
            Dim d = eng.ext_dim(M, eng.free_one(), i);
            if (!d || *d != 0) return static_cast<std::int64_t>(i);
        }
        throw Error(Errc::internal, "grade search exceeded the variable count");
    });
    return Dim(static_cast<std::uint64_t>(g));
}

struct TorsionfreeReport {
    bool torsionfree = true;
    std::vector<Dim> ext_dims;  // dim Ext^i(Tr M, R), i = 1..n
};

// n-torsionfree test: Ext^i(Tr M, R) = 0 for 1 <= i <= n, with the full
// dimension table as witness.
inline TorsionfreeReport is_n_torsionfree(Engine& eng, const ModulePresentation& M, std::size_t n)
{
    TorsionfreeReport rep;
    const ModulePresentation& tr =
        eng.memo_module("tr|" + eng.module_key(M), [&] { return transpose_module(M); });
    for (std::size_t i = 1; i <= n; ++i) {
        Dim d = eng.ext_dim(tr, eng.free_one(), i);
        rep.ext_dims.push_back(d);
        if (!d || *d != 0) rep.torsionfree = false;
    }
    return rep;
}

// n-spherical: Ext^i(M, R) = 0 for 1 <= i <= n-1 and pd M <= n.
inline bool is_n_spherical(Engine& eng, const ModulePresentation& M, std::size_t n)
{
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        Dim d = eng.ext_dim(M, eng.free_one(), i);
        if (!d || *d != 0) return false;
    }
    return eng.betti(M, n + 1) == 0;
}

// Exact for graded quotients: Gorenstein iff Cohen-Macaulay of type one.
inline bool is_gorenstein(Engine& eng)
{
    return static_cast<int>(ring_depth(eng)) == eng.ring().krull_dim() && ring_type(eng) == 1;
}

// Socle ideal (0 :_R m) as polynomial generators.
inline std::vector<Polynomial> socle_ideal(Engine& eng)
{
    const Ring& R = eng.ring();
    std::vector<Polynomial> vars;
    for (std::size_t v = 0; v < R.nvars(); ++v)
        vars.push_back(Polynomial::term(Monomial::var(R.nvars(), v), 1));
    std::vector<FreeVector> soc = colon({}, 1, vars, R, std::vector<int>{0});
    std::vector<Polynomial> out;
    for (const auto& s : soc)
        if (!s.is_zero()) out.push_back(s.entries().front().second);
    return out;
}

// dim_k of M / (0 :_M (0 :_R m)), by two colon computations.
inline std::uint64_t socle_quotient_dim(Engine& eng, const ModulePresentation& M)
{
    if (M.is_zero_module()) return 0;
    const Ring& R = eng.ring();
    std::vector<Polynomial> soc = socle_ideal(eng);
    std::vector<FreeVector> cgens =
        colon(M.relation_columns(), M.generators(), soc, R, M.gen_degrees());
    ModulePresentation quot = make_presentation(
        M.ring(), columns_to_matrix(cgens, M.generators()), M.gen_degrees(),
        "soclequot(" + M.label() + ")", false);
    Dim d = module_dim_k(quot);
    if (!d) throw Error(Errc::not_finite_length, "socle quotient has infinite length");
    return *d;
}

// Direct Hom dimension from the presentation, used by tests as an
// independent route against Ext^0.
inline Dim hom_dim_direct(Engine& eng, const ModulePresentation& M, const ModulePresentation& N)
{
    Resolution& res = eng.resolution(M, 1);
    ModulePresentation h = ext_presentation(res, N, 0, "Hom(" + M.label() + "," + N.label() + ")");
    return module_dim_k(h);
}

// Computed scalars and tables for one module over its ring.
struct InvariantReport {
    std::string ring_label;
    std::string module_label;
    std::size_t depth_ring = 0;
    std::uint64_t type = 0;
    int krull_dim = 0;
    std::optional<std::size_t> depth_module;  // absent for the zero module
    std::vector<std::size_t> betti;           // beta_i(M), i = 0..bound
    std::vector<std::uint64_t> bass;          // mu_i(M), i = 0..bound
    std::vector<Dim> ext_table;               // dim Ext^i(M, R), i = 0..bound
    Dim grade;                                // INFINITE for the zero module
    Dim dim_k;
};

inline InvariantReport invariant_report(Engine& eng, const ModulePresentation& M, std::size_t bound)
{
    InvariantReport rep;
    rep.ring_label = eng.ring().label();
    rep.module_label = M.label();
    rep.depth_ring = ring_depth(eng);
    rep.type = ring_type(eng);
    rep.krull_dim = eng.ring().krull_dim();
    if (!M.is_zero_module()) rep.depth_module = module_depth(eng, M);
    for (std::size_t i = 0; i <= bound; ++i) {
        rep.betti.push_back(eng.betti(M, i));
        rep.bass.push_back(eng.bass(M, i));
        rep.ext_table.push_back(eng.ext_dim(M, eng.free_one(), i));
    }
    rep.grade = module_grade(eng, M);
    rep.dim_k = eng.dim_k(M);
    if (rep.depth_module && static_cast<int>(*rep.depth_module) > rep.krull_dim)
        throw Error(Errc::internal, "depth exceeds Krull dimension");
    return rep;
}

}  // namespace syzlab
