#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "syzlab/io.hpp"
#include "syzlab/ring.hpp"

namespace testsup {

using namespace syzlab;

inline RingPtr make_test_ring(std::uint32_t p, std::vector<std::string> vars,
                              std::vector<std::string> ideal, std::string label)
{
    RingDescriptor d;
    d.characteristic = p;
    d.vars = std::move(vars);
    d.label = std::move(label);
    PrimeField F(p);
    for (const auto& s : ideal) d.ideal.push_back(parse_polynomial(s, d.vars, F));
    return make_ring(std::move(d));
}

inline RingPtr ring_S2() { return make_test_ring(32003, {"x", "y"}, {}, "S_2"); }
inline RingPtr ring_S3() { return make_test_ring(32003, {"x", "y", "z"}, {}, "S_3"); }
inline RingPtr ring_R2()
{
    return make_test_ring(32003, {"x", "y"}, {"x^2", "x*y", "y^2"}, "R_2");
}
inline RingPtr ring_Rg() { return make_test_ring(32003, {"x", "y"}, {"x^2", "y^2"}, "R_g"); }
inline RingPtr ring_Rex()
{
    return make_test_ring(32003, {"x", "y", "z"}, {"x^2", "x*y", "y^2*z"}, "R_ex");
}
inline RingPtr ring_C3()
{
    return make_test_ring(32003, {"x", "y", "z"}, {"x^3", "y^3", "z^3"}, "C_3");
}
inline RingPtr ring_T()
{
    return make_test_ring(32003, {"x", "y"}, {"x^3", "x*y"}, "T_mixed");
}

inline Polynomial P(const RingPtr& R, const std::string& text)
{
    return parse_polynomial(text, R->desc().vars, R->field());
}

// Random polynomial, homogeneous of the given degree, possibly zero.
inline Polynomial random_homog(const RingPtr& R, std::uint32_t deg, std::mt19937& rng)
{
    std::size_t nv = R->nvars();
    const PrimeField& F = R->field();
    std::vector<Term> terms;
    std::vector<std::uint32_t> e(nv, 0);
    // Enumerate monomials of the given degree via stars and bars walk.
    std::vector<Monomial> monos;
    std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t v, std::uint32_t left) {
        if (v + 1 == nv) {
            e[v] = left;
            monos.push_back(Monomial(e));
            return;
        }
        for (std::uint32_t take = 0; take <= left; ++take) {
            e[v] = take;
            walk(v + 1, left - take);
        }
    };
    if (nv == 0) return Polynomial();
    walk(0, deg);
    std::uniform_int_distribution<std::uint32_t> coeff(0, 4);
    for (const auto& m : monos) {
        std::uint32_t c = coeff(rng);
        if (c == 0 || c == 1) continue;  // keep polynomials sparse
        terms.push_back({m, c % F.characteristic()});
    }
    return Polynomial::collect(std::move(terms), F);
}

}  // namespace testsup
