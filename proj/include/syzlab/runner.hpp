#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "syzlab/session.hpp"

namespace syzlab {

struct RunOptions {
    std::string cache_dir;
    std::optional<std::uint32_t> char_override;
    std::optional<std::size_t> bound_override;
    std::size_t jobs = 1;
    int corpus_depth = 0;  // recursion guard for nested corpus commands
};

struct RunResult {
    std::string human;
    std::string machine;
    std::size_t checks = 0;
    std::size_t failed_checks = 0;
    std::size_t reports = 0;
    std::size_t failed_reports = 0;
    std::size_t not_applicable = 0;
    // theorem id -> (passes, failures) at report granularity
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_theorem;

    bool any_fail() const { return failed_checks > 0 || failed_reports > 0; }

    void absorb(const TheoremReport& rep)
    {
        human += human_report(rep);
        machine += machine_lines(rep);
        ++reports;
        if (rep.not_applicable) {
            ++not_applicable;
            return;
        }
        bool ok = rep.overall();
        if (!ok) ++failed_reports;
        auto& pt = per_theorem[rep.theorem_id];
        (ok ? pt.first : pt.second) += 1;
        for (const auto& c : rep.checks) {
            ++checks;
            if (!c.pass) ++failed_checks;
        }
    }

    void merge(const RunResult& o)
    {
        human += o.human;
        machine += o.machine;
        checks += o.checks;
        failed_checks += o.failed_checks;
        reports += o.reports;
        failed_reports += o.failed_reports;
        not_applicable += o.not_applicable;
        for (const auto& [id, pf] : o.per_theorem) {
            per_theorem[id].first += pf.first;
            per_theorem[id].second += pf.second;
        }
    }
};

RunResult run_corpus(const std::string& dir, RunOptions opt);

namespace detail {

inline ModulePresentation eval_modexpr(Engine& eng, const ModExpr& e,
                                       const std::map<std::string, ModulePresentation>& env,
                                       const std::string& label)
{
    const RingPtr& ring = eng.ring_ptr();
    switch (e.kind) {
    case ModExpr::Kind::free: {
        auto m = free_module(ring, e.num);
        m.set_label(label.empty() ? m.label() : label);
        return m;
    }
    case ModExpr::Kind::cok: return cokernel_module(ring, e.m1, label);
    case ModExpr::Kind::ideal: return ideal_module(ring, e.polys, label);
    case ModExpr::Kind::residue_field: {
        auto m = eng.residue_field_module();
        if (!label.empty()) m.set_label(label);
        return m;
    }
    case ModExpr::Kind::syz:
        return syzygy_module(eng, eval_modexpr(eng, *e.args[0], env, ""), e.num, label);
    case ModExpr::Kind::tr:
        return transpose_module(eval_modexpr(eng, *e.args[0], env, ""), label);
    case ModExpr::Kind::dual:
        return dual_module(eval_modexpr(eng, *e.args[0], env, ""), label);
    case ModExpr::Kind::dsum:
        return direct_sum_module(eval_modexpr(eng, *e.args[0], env, ""),
                                 eval_modexpr(eng, *e.args[1], env, ""), label);
    case ModExpr::Kind::subq: {
        if (e.m2.cols() > 0 && e.m1.rows() != e.m2.rows())
            throw Error(Errc::dimension_mismatch, "subq matrices have different row counts");
        return present_subquotient(ring, matrix_columns(e.m1), matrix_columns(e.m2), e.m1.rows(),
                                   std::vector<int>(e.m1.rows(), 0), label);
    }
    case ModExpr::Kind::ext: {
        auto m = eng.ext_module(eval_modexpr(eng, *e.args[0], env, ""),
                                eval_modexpr(eng, *e.args[1], env, ""), e.num);
        if (!label.empty()) m.set_label(label);
        return m;
    }
    case ModExpr::Kind::ref: {
        auto it = env.find(e.name);
        if (it != env.end()) return it->second;
        if (e.name == "residue_field" || e.name == "k") return eng.residue_field_module();
        if (e.name == "R") return eng.free_one();
        throw Error(Errc::unknown_name, "'" + e.name + "' is not bound");
    }
    }
    throw Error(Errc::internal, "unhandled expression kind");
}

inline const ModulePresentation& resolve_name(const std::map<std::string, ModulePresentation>& env,
                                              Engine& eng, const std::string& name)
{
    auto it = env.find(name);
    if (it != env.end()) return it->second;
    if (name == "residue_field" || name == "k") return eng.residue_field_module();
    if (name == "R") return eng.free_one();
    throw Error(Errc::unknown_name, "'" + name + "' is not bound");
}

inline std::size_t kv_uint(const std::map<std::string, std::string>& kv, const std::string& key,
                           std::size_t fallback, bool required = false)
{
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (required)
            throw Error(Errc::parse_error, "verify argument '" + key + "' is required");
        return fallback;
    }
    return static_cast<std::size_t>(std::stoull(it->second));
}

inline std::string ring_auto_label(const RingDescriptor& d)
{
    std::string s = "F" + std::to_string(d.characteristic) + "[";
    for (std::size_t i = 0; i < d.vars.size(); ++i) {
        if (i) s += ",";
        s += d.vars[i];
    }
    s += "]";
    if (!d.ideal.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < d.ideal.size(); ++i) {
            if (i) s += ",";
            s += print_polynomial(d.ideal[i], d.vars);
        }
        s += ")";
    }
    return s;
}

}  // namespace detail

inline TheoremReport dispatch_verify(Engine& eng,
                                     const std::map<std::string, ModulePresentation>& env,
                                     const Command& c, std::size_t session_bound,
                                     const std::string& cache_dir)
{
    using detail::kv_uint;
    using detail::resolve_name;
    std::size_t bound = kv_uint(c.kv, "bound", session_bound);
    int corrupt = static_cast<int>(kv_uint(c.kv, "corrupt", 0));
    auto module_arg = [&](const char* key) -> const ModulePresentation& {
        auto it = c.kv.find(key);
        if (it == c.kv.end())
            throw Error(Errc::parse_error,
                        std::string("verify ") + c.a + " requires " + key + "=<module>");
        return resolve_name(env, eng, it->second);
    };
    if (c.a == "thm_2_3")
        return verify_thm_2_3(eng, module_arg("M"), kv_uint(c.kv, "n", 0, true), bound, corrupt);
    if (c.a == "cor_2_5") return verify_cor_2_5(eng, bound, corrupt);
    if (c.a == "cor_2_7")
        return verify_cor_2_7(eng, module_arg("M"), kv_uint(c.kv, "n", 0, true), corrupt);
    if (c.a == "lemma_3_1")
        return verify_lemma_3_1(eng, module_arg("M"), module_arg("N"),
                                kv_uint(c.kv, "n", 0, true), corrupt);
    if (c.a == "lemma_3_2")
        return verify_lemma_3_2(eng, kv_uint(c.kv, "j", 0, true), module_arg("M"), bound, corrupt);
    if (c.a == "thm_3_6") return verify_thm_3_6(eng, module_arg("M"), bound, corrupt);
    if (c.a == "remark_3_7") return verify_remark_3_7(eng, module_arg("M"), corrupt);
    if (c.a == "cor_3_8") return verify_cor_3_8(eng, bound, corrupt);
    if (c.a == "cor_3_9") return verify_cor_3_9(eng, bound, corrupt);
    if (c.a == "example")
        return reproduce_example(
            static_cast<std::uint32_t>(kv_uint(c.kv, "p", eng.ring().desc().characteristic)),
            corrupt, cache_dir);
    throw Error(Errc::parse_error, "unknown theorem id '" + c.a + "'");
}

inline RunResult run_session(Session s, const RunOptions& opt)
{
    RunResult out;
    if (opt.char_override) s.ring.characteristic = *opt.char_override;
    if (opt.bound_override) s.bound = *opt.bound_override;

    std::optional<Engine> eng;
    std::map<std::string, ModulePresentation> env;
    if (s.has_ring) {
        if (s.ring.label.empty()) s.ring.label = detail::ring_auto_label(s.ring);
        RingPtr ring = make_ring(s.ring);
        eng.emplace(ring, EngineOptions{opt.cache_dir});
        for (const auto& [name, expr] : s.bindings)
            env.emplace(name, detail::eval_modexpr(*eng, *expr, env, name));
    }

    for (const auto& c : s.commands) {
        switch (c.kind) {
        case Command::Kind::invariants: {
            if (!eng) throw Error(Errc::parse_error, "no ring declared");
            const auto& M = detail::resolve_name(env, *eng, c.a);
            InvariantReport rep = invariant_report(*eng, M, s.bound);
            std::ostringstream h;
            h << "== invariants " << M.label() << " over " << rep.ring_label << " ==\n";
            h << "  ring: depth " << rep.depth_ring << ", type " << rep.type << ", krull_dim "
              << rep.krull_dim << "\n";
            h << "  module: dim_k " << dim_str(rep.dim_k) << ", depth "
              << (rep.depth_module ? std::to_string(*rep.depth_module) : "-") << ", grade "
              << dim_str(rep.grade) << "\n";
            h << "  betti:";
            for (auto b : rep.betti) h << " " << b;
            h << "\n  bass:";
            for (auto m : rep.bass) h << " " << m;
            h << "\n  ext^i(M,R):";
            for (const auto& d : rep.ext_table) h << " " << dim_str(d);
            h << "\n";
            out.human += h.str();
            break;
        }
        case Command::Kind::resolve: {
            if (!eng) throw Error(Errc::parse_error, "no ring declared");
            const auto& M = detail::resolve_name(env, *eng, c.a);
            Resolution& res = eng->resolution(M, std::max<std::size_t>(c.n, 1));
            std::ostringstream h;
            h << "== resolve " << M.label() << " to " << c.n << " ==\n  betti:";
            for (std::size_t i = 0; i <= c.n; ++i) h << " " << res.betti(i);
            h << "\n  minimal: " << (res.minimal() ? "yes" : "no") << "\n";
            out.human += h.str();
            break;
        }
        case Command::Kind::ext_table: {
            if (!eng) throw Error(Errc::parse_error, "no ring declared");
            const auto& A = detail::resolve_name(env, *eng, c.a);
            const auto& B = detail::resolve_name(env, *eng, c.b);
            std::ostringstream h;
            h << "== ext_table " << A.label() << " " << B.label() << " to " << c.n << " ==\n";
            for (std::size_t i = 0; i <= c.n; ++i)
                h << "  dim Ext^" << i << " = " << dim_str(eng->ext_dim(A, B, i)) << "\n";
            out.human += h.str();
            break;
        }
        case Command::Kind::verify: {
            if (!eng) throw Error(Errc::parse_error, "no ring declared");
            TheoremReport rep = dispatch_verify(*eng, env, c, s.bound, opt.cache_dir);
            out.absorb(rep);
            break;
        }
        case Command::Kind::corpus: {
            if (opt.corpus_depth >= 3)
                throw Error(Errc::parse_error, "corpus nesting too deep");
            RunOptions sub = opt;
            sub.corpus_depth += 1;
            out.merge(run_corpus(c.a, sub));
            break;
        }
        }
    }
    return out;
}

inline RunResult run_session_text(const std::string& text, const RunOptions& opt)
{
    return run_session(parse_session(text), opt);
}

inline RunResult run_session_file(const std::string& path, const RunOptions& opt)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open session file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return run_session_text(ss.str(), opt);
}

// Runs every *.syz session under dir (sorted by name) across a worker pool;
// output is aggregated in name order, so it does not depend on the job count.
inline RunResult run_corpus(const std::string& dir, RunOptions opt)
{
    std::vector<std::string> files;
    std::error_code ec;
    for (auto it = std::filesystem::directory_iterator(dir, ec);
         !ec && it != std::filesystem::directory_iterator(); ++it) {
        if (it->path().extension() == ".syz") files.push_back(it->path().string());
    }
    if (ec) throw Error(Errc::io_error, "cannot read corpus directory " + dir);
    std::sort(files.begin(), files.end());

    std::vector<RunResult> results(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<std::size_t> next{0};
    std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, files.size()));
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                RunOptions sub = opt;
                sub.jobs = 1;
                results[i] = run_session_file(files[i], sub);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RunResult out;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::string name = std::filesystem::path(files[i]).filename().string();
        out.human += "--- session " + name + " ---\n";
        if (!errors[i].empty()) {
            out.human += "  ERROR: " + errors[i] + "\n";
            out.machine += "error\t" + name + "\t" + errors[i] + "\t-\t-\tFAIL\n";
            ++out.failed_reports;
            continue;
        }
        out.merge(results[i]);
    }
    std::ostringstream sum;
    sum << "=== corpus summary (" << files.size() << " sessions) ===\n";
    for (const auto& [id, pf] : out.per_theorem)
        sum << "  " << id << ": " << pf.first << " pass, " << pf.second << " fail\n";
    sum << "  checks: " << out.checks << " total, " << out.failed_checks << " failed, "
        << out.not_applicable << " N/A reports\n";
    out.human += sum.str();
    return out;
}

}  // namespace syzlab
