#pragma once

#include <memory>
#include <string>
#include <vector>

#include "syzlab/groebner.hpp"
#include "syzlab/hash.hpp"
#include "syzlab/matrix.hpp"

namespace syzlab {

// Defining data of R = S/I with S = F_p[vars] and I homogeneous.
struct RingDescriptor {
    std::uint32_t characteristic = 32003;
    std::vector<std::string> vars;
    std::vector<Polynomial> ideal;
    std::string label;
};

// Runtime context for a quotient ring: the field, a reduced basis of the
// defining ideal, and the cached combinatorial invariants.
class Ring {
public:
    explicit Ring(RingDescriptor desc) : desc_(std::move(desc)), field_(desc_.characteristic)
    {
        for (const auto& g : desc_.ideal) {
            if (g.is_zero()) continue;
            if (!g.is_homogeneous())
                throw Error(Errc::nonhomogeneous_ideal, "ideal generator is not homogeneous");
            for (const auto& t : g.terms())
                if (t.mono.nvars() != desc_.vars.size())
                    throw Error(Errc::dimension_mismatch, "ideal generator over wrong variable set");
        }
        ideal_gb_ = buchberger_ideal(desc_.ideal, field_);
        krull_dim_ = krull_dimension(ideal_gb_, desc_.vars.size());
        dim_k_ = std_monomial_count(ideal_gb_, desc_.vars.size());
        hash_ = fnv1a64(content_key());
    }

    const RingDescriptor& desc() const { return desc_; }
    const PrimeField& field() const { return field_; }
    std::size_t nvars() const { return desc_.vars.size(); }
    const GroebnerBasis& ideal_gb() const { return ideal_gb_; }
    const std::string& label() const { return desc_.label; }

    bool is_polynomial_ring() const { return ideal_gb_.empty(); }

    int krull_dim() const { return krull_dim_; }

    // dim_k of R itself; nullopt when R is not artinian.
    std::optional<std::uint64_t> dim_k() const { return dim_k_; }

    Polynomial nf(const Polynomial& p) const
    {
        if (ideal_gb_.empty()) return p;
        FreeVector r = ideal_gb_.nf(FreeVector::single(0, p), field_);
        return r.is_zero() ? Polynomial() : r.entries().front().second;
    }

    FreeVector nf_vec(const FreeVector& v) const
    {
        if (ideal_gb_.empty()) return v;
        std::vector<FreeVector::Entry> out;
        for (const auto& e : v.entries()) {
            Polynomial r = nf(e.second);
            if (!r.is_zero()) out.emplace_back(e.first, std::move(r));
        }
        return FreeVector::collect(std::move(out), field_);
    }

    // Ideal generators lifted as vectors in component c of S^b.
    std::vector<FreeVector> ideal_in_component(std::uint32_t c) const
    {
        std::vector<FreeVector> out;
        for (const auto& g : ideal_gb_.generators())
            out.push_back(FreeVector::single(c, g.entries().front().second));
        return out;
    }

    std::vector<Monomial> std_monomials() const
    {
        return standard_monomials(ideal_gb_, desc_.vars.size());
    }

    // Canonical serialization used for content-addressed cache keys.
    std::string content_key() const
    {
        std::string s = "char " + std::to_string(desc_.characteristic) + " vars";
        for (const auto& v : desc_.vars) s += " " + v;
        s += " ideal";
        for (const auto& g : ideal_gb_.generators()) {
            s += " [";
            for (const auto& t : g.entries().front().second.terms()) {
                s += std::to_string(t.coeff) + ":";
                for (auto e : t.mono.exps()) s += std::to_string(e) + ",";
                s += ";";
            }
            s += "]";
        }
        return s;
    }

    std::uint64_t hash() const { return hash_; }

    bool same_ring(const Ring& o) const { return hash_ == o.hash_ && content_key() == o.content_key(); }

private:
    RingDescriptor desc_;
    PrimeField field_;
    GroebnerBasis ideal_gb_;
    int krull_dim_ = 0;
    std::optional<std::uint64_t> dim_k_;
    std::uint64_t hash_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(RingDescriptor desc) { return std::make_shared<Ring>(std::move(desc)); }

}  // namespace syzlab
