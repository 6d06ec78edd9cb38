#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "syzlab/oracle.hpp"
#include "syzlab/stable.hpp"

using namespace syzlab;
using testsup::P;

TEST_CASE("linearize", "[oracle]")
{
    auto R = testsup::ring_R2();
    ArtinianAlgebra A = linearize_ring(R);
    SECTION("the algebra has the standard monomial basis")
    {
        REQUIRE(A.dim() == 3);
        REQUIRE(A.basis[0].is_one());
    }
    SECTION("multiplication operators commute and satisfy the relations")
    {
        const PrimeField& F = R->field();
        REQUIRE(mul(A.mult_ops[0], A.mult_ops[1], F) == mul(A.mult_ops[1], A.mult_ops[0], F));
        // x^2 = 0, xy = 0, y^2 = 0 as operators
        FpMat zero(3, 3);
        REQUIRE(mul(A.mult_ops[0], A.mult_ops[0], F) == zero);
        REQUIRE(mul(A.mult_ops[0], A.mult_ops[1], F) == zero);
        REQUIRE(mul(A.mult_ops[1], A.mult_ops[1], F) == zero);
    }
    SECTION("k linearizes to the one-dimensional module with zero actions")
    {
        LinearModule k = linearize(A, residue_field(R));
        REQUIRE(k.dim == 1);
        for (const auto& a : k.action) REQUIRE(a.at(0, 0) == 0);
    }
    SECTION("R linearizes to itself")
    {
        LinearModule m = linearize(A, free_module(R, 1));
        REQUIRE(m.dim == 3);
        REQUIRE(m.action[0] == A.mult_ops[0]);
    }
    SECTION("a presented module matches the Groebner dimension")
    {
        Engine eng(R);
        auto Trk = transpose_module(eng.residue_field_module(), "Trk");
        LinearModule L = linearize(A, Trk);
        REQUIRE(Dim(L.dim) == module_dim_k(Trk));
    }
    SECTION("the example module over an artinian truncation matches the graded dimension")
    {
        auto Rt = testsup::make_test_ring(32003, {"x", "y", "z"},
                                          {"x^2", "x*y", "y^2*z", "y^3", "z^4"}, "R_ex_trunc");
        const PrimeField& F = Rt->field();
        std::vector<FreeVector> gens = {FreeVector::single(0, testsup::P(Rt, "y")),
                                        FreeVector::single(1, testsup::P(Rt, "z"))};
        std::vector<FreeVector> rels = {FreeVector::collect(
            {{0, testsup::P(Rt, "y")}, {1, testsup::P(Rt, "z")}}, F)};
        auto M = present_subquotient(Rt, gens, rels, 2, std::vector<int>{0, 0}, "M");
        ArtinianAlgebra At = linearize_ring(Rt);
        LinearModule LM = linearize(At, M);
        REQUIRE(Dim(LM.dim) == module_dim_k(M));
    }
    SECTION("non-artinian rings are rejected")
    {
        REQUIRE_THROWS_MATCHES(linearize_ring(testsup::ring_Rex()), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == Errc::not_artinian;
                               }));
    }
}

TEST_CASE("oracle dimensions", "[oracle]")
{
    auto R = testsup::ring_R2();
    ArtinianAlgebra A = linearize_ring(R);
    LinearModule k = linearize(A, residue_field(R));
    LinearModule Rm = linearize(A, free_module(R, 1));
    SECTION("Tor_i(k, k) doubles")
    {
        OracleResolution res(A, k);
        for (std::size_t i = 0; i <= 4; ++i) REQUIRE(res.tor_dim(k, i) == (1ull << i));
    }
    SECTION("Ext^1(k, k) is the embedding dimension")
    {
        OracleResolution res(A, k);
        REQUIRE(res.ext_dim(k, 1) == 2);
    }
    SECTION("free modules have no higher Ext or Tor")
    {
        OracleResolution res(A, Rm);
        for (std::size_t i = 1; i <= 3; ++i) {
            REQUIRE(res.ext_dim(k, i) == 0);
            REQUIRE(res.tor_dim(k, i) == 0);
        }
    }
    SECTION("self-injectivity of the Gorenstein fixture")
    {
        auto Rg = testsup::ring_Rg();
        ArtinianAlgebra Ag = linearize_ring(Rg);
        LinearModule kg = linearize(Ag, residue_field(Rg));
        LinearModule Rgm = linearize(Ag, free_module(Rg, 1));
        OracleResolution res(Ag, kg);
        REQUIRE(res.ext_dim(Rgm, 0) == 1);
        for (std::size_t i = 1; i <= 3; ++i) REQUIRE(res.ext_dim(Rgm, i) == 0);
    }
}

TEST_CASE("hom-tensor balance inside the oracle", "[oracle]")
{
    // Resolving M against N and N against M give the same Tor dimensions.
    auto balance = [](const RingPtr& R) {
        ArtinianAlgebra A = linearize_ring(R);
        Engine eng(R);
        std::vector<LinearModule> mods = {
            linearize(A, eng.residue_field_module()), linearize(A, eng.free_one()),
            linearize(A, transpose_module(eng.residue_field_module(), "Trk"))};
        for (const auto& M : mods)
            for (const auto& N : mods) {
                OracleResolution rm(A, M);
                OracleResolution rn(A, N);
                for (std::size_t i = 0; i <= 4; ++i)
                    REQUIRE(rm.tor_dim(N, i) == rn.tor_dim(M, i));
            }
    };
    balance(testsup::ring_R2());
    balance(testsup::ring_Rg());
}

TEST_CASE("oracle agrees with the graded pipeline", "[oracle]")
{
    auto agree = [](const RingPtr& R) {
        ArtinianAlgebra A = linearize_ring(R);
        Engine eng(R);
        std::vector<ModulePresentation> mods = {
            eng.residue_field_module(), eng.free_one(),
            transpose_module(eng.residue_field_module(), "Trk"),
            syzygy_module(eng, eng.residue_field_module(), 1)};
        for (const auto& M : mods) {
            LinearModule LM = linearize(A, M);
            OracleResolution res(A, LM);
            for (const auto& N : mods) {
                LinearModule LN = linearize(A, N);
                for (std::size_t i = 0; i <= 4; ++i) {
                    REQUIRE(Dim(res.ext_dim(LN, i)) == eng.ext_dim(M, N, i));
                    REQUIRE(res.tor_dim(LN, i) == eng.tor_dim(M, N, i));
                }
            }
        }
    };
    agree(testsup::ring_R2());
    agree(testsup::ring_Rg());
}

TEST_CASE("oracle betti ranks are the pipeline betti numbers", "[oracle]")
{
    auto R = testsup::ring_R2();
    ArtinianAlgebra A = linearize_ring(R);
    Engine eng(R);
    auto Trk = transpose_module(eng.residue_field_module(), "Trk");
    OracleResolution res(A, linearize(A, Trk));
    for (std::size_t i = 0; i <= 5; ++i) REQUIRE(res.rank(i) == eng.betti(Trk, i));
}
