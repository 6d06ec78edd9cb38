#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include "syzlab/cache.hpp"
#include "syzlab/hom.hpp"

namespace syzlab {

struct EngineOptions {
    std::string cache_dir;  // empty disables the disk cache
};

// Per-ring computation context. Owns the resolution store (in memory plus the
// optional content-addressed disk cache) and memoizes the dimension queries
// the verifiers lean on. One engine per worker; not shared across threads.
class Engine {
public:
    explicit Engine(RingPtr ring, EngineOptions opt = {})
        : ring_(std::move(ring)), cache_(opt.cache_dir)
    {
    }

    const RingPtr& ring_ptr() const { return ring_; }
    const Ring& ring() const { return *ring_; }

    const ModulePresentation& residue_field_module()
    {
        if (!k_) k_ = residue_field(ring_);
        return *k_;
    }

    const ModulePresentation& free_one()
    {
        if (!r_) r_ = free_module(ring_, 1, "R");
        return *r_;
    }

    // Resolution of M with d_1..d_N available. The reference stays valid for
    // the lifetime of the engine.
    Resolution& resolution(const ModulePresentation& M, std::size_t N)
    {
        std::string key = module_key(M);
        auto it = resolutions_.find(key);
        if (it == resolutions_.end()) {
            std::optional<Resolution> loaded = try_load(M);
            if (loaded)
                it = resolutions_.emplace(key, std::move(*loaded)).first;
            else
                it = resolutions_.emplace(key, Resolution(M)).first;
            saved_levels_[key] = it->second.computed_to();
        }
        Resolution& res = it->second;
        if (res.computed_to() < N) {
            res.extend(N);
            sync_to_disk(M, res);
        }
        return res;
    }

    Dim dim_k(const ModulePresentation& M)
    {
        return memo_dim("dimk|" + module_key(M), [&] { return module_dim_k(M); });
    }

    // dim_k Ext^i(M, N); nullopt when the Ext module has infinite length.
    Dim ext_dim(const ModulePresentation& M, const ModulePresentation& N, std::size_t i)
    {
        std::string key = "ext|" + module_key(M) + "|" + module_key(N) + "|" + std::to_string(i);
        return memo_dim(key, [&] {
            Resolution& res = resolution(M, i + 1);
            ModulePresentation e = ext_presentation(res, N, i);
            return module_dim_k(e);
        });
    }

    // Presented Ext module, minimalized and interned.
    const ModulePresentation& ext_module(const ModulePresentation& M, const ModulePresentation& N,
                                         std::size_t i, const std::string& label = "")
    {
        std::string key = "extmod|" + module_key(M) + "|" + module_key(N) + "|" + std::to_string(i);
        return memo_module(key, [&] {
            Resolution& res = resolution(M, i + 1);
            std::string lab = label.empty() ? "Ext^" + std::to_string(i) + "(" + M.label() + "," +
                                                  N.label() + ")"
                                            : label;
            return ext_presentation(res, N, i, lab);
        });
    }

    Dim tor_dim_maybe(const ModulePresentation& M, const ModulePresentation& N, std::size_t i)
    {
        std::string key = "tor|" + module_key(M) + "|" + module_key(N) + "|" + std::to_string(i);
        return memo_dim(key, [&] {
            Resolution& res = resolution(M, i + 1);
            ModulePresentation t = tor_presentation(res, N, i);
            return module_dim_k(t);
        });
    }

    std::uint64_t tor_dim(const ModulePresentation& M, const ModulePresentation& N, std::size_t i)
    {
        Dim d = tor_dim_maybe(M, N, i);
        if (!d) throw Error(Errc::not_finite_length, "Tor module has infinite length");
        return *d;
    }

    std::size_t betti(const ModulePresentation& M, std::size_t i)
    {
        return resolution(M, i == 0 ? 1 : i).betti(i);
    }

    // Bass number mu_i(M) = dim Ext^i(k, M); always finite.
    std::uint64_t bass(const ModulePresentation& M, std::size_t i)
    {
        Dim d = ext_dim(residue_field_module(), M, i);
        if (!d) throw Error(Errc::internal, "Ext^i(k, M) must have finite length");
        return *d;
    }

    // Betti number through the independent pipeline: dim Tor_i(k, M),
    // resolving k rather than M.
    std::uint64_t betti_via_tor(const ModulePresentation& M, std::size_t i)
    {
        return tor_dim(residue_field_module(), M, i);
    }

    const CacheStore& cache() const { return cache_; }

    std::string module_key(const ModulePresentation& M)
    {
        return to_hex64(fnv1a64(M.content_key()));
    }

    // Generic memo helpers shared by the stable-theory operations.
    const ModulePresentation& memo_module(const std::string& key,
                                          const std::function<ModulePresentation()>& make)
    {
        auto it = modules_.find(key);
        if (it == modules_.end()) it = modules_.emplace(key, make()).first;
        return it->second;
    }

    std::int64_t memo_scalar(const std::string& key, const std::function<std::int64_t()>& make)
    {
        auto it = scalars_.find(key);
        if (it == scalars_.end()) it = scalars_.emplace(key, make()).first;
        return it->second;
    }

private:
    Dim memo_dim(const std::string& key, const std::function<Dim()>& make)
    {
        std::int64_t enc = memo_scalar(key, [&]() -> std::int64_t {
            Dim d = make();
            return d ? static_cast<std::int64_t>(*d) : -1;
        });
        return enc < 0 ? Dim(std::nullopt) : Dim(static_cast<std::uint64_t>(enc));
    }

    std::string res_file_prefix(const ModulePresentation& M)
    {
        return "res-" + to_hex64(ring_->hash()) + "-" + module_key(M) + "-N";
    }

    std::optional<Resolution> try_load(const ModulePresentation& M)
    {
        if (!cache_.enabled()) return std::nullopt;
        std::string prefix = res_file_prefix(M);
        std::size_t best = 0;
        std::string best_name;
        for (const auto& name : cache_.list_prefix(prefix)) {
            if (name.find(".tmp.") != std::string::npos) continue;
            std::size_t n = std::strtoull(name.c_str() + prefix.size(), nullptr, 10);
            if (best_name.empty() || n > best) {
                best = n;
                best_name = name;
            }
        }
        if (best_name.empty()) return std::nullopt;
        auto text = cache_.load(best_name);
        if (!text) return std::nullopt;
        auto res = parse_resolution(*text, ring_);
        if (res && res->betti(0) != M.generators()) return std::nullopt;
        return res;
    }

    void sync_to_disk(const ModulePresentation& M, const Resolution& res)
    {
        if (!cache_.enabled()) return;
        std::string key = module_key(M);
        std::size_t& saved = saved_levels_[key];
        if (res.computed_to() <= saved) return;
        cache_.store(res_file_prefix(M) + std::to_string(res.computed_to()) + ".txt",
                     serialize_resolution(res));
        saved = res.computed_to();
    }

    RingPtr ring_;
    CacheStore cache_;
    std::optional<ModulePresentation> k_;
    std::optional<ModulePresentation> r_;
    std::map<std::string, Resolution> resolutions_;
    std::map<std::string, std::size_t> saved_levels_;
    std::map<std::string, ModulePresentation> modules_;
    std::map<std::string, std::int64_t> scalars_;
};

}  // namespace syzlab
