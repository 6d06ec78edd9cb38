#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "syzlab/presentation.hpp"

namespace syzlab {

struct CheckRecord {
    std::string description;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// One verification routine's structured result: every computed dimension is
// recorded, so a failure localizes to a single formula instance.
struct TheoremReport {
    std::string theorem_id;
    std::string ring_label;
    std::string parameters;
    std::vector<CheckRecord> checks;
    bool not_applicable = false;  // preconditions unmet
    std::string na_reason;

    bool overall() const
    {
        if (not_applicable) return true;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check_eq(const std::string& desc, const Dim& lhs, const Dim& rhs)
    {
        checks.push_back({desc, dim_str(lhs), dim_str(rhs), lhs == rhs});
    }

    void check_eq_u64(const std::string& desc, std::uint64_t lhs, std::uint64_t rhs)
    {
        checks.push_back({desc, std::to_string(lhs), std::to_string(rhs), lhs == rhs});
    }

    void check_eq_i64(const std::string& desc, std::int64_t lhs, std::int64_t rhs)
    {
        checks.push_back({desc, std::to_string(lhs), std::to_string(rhs), lhs == rhs});
    }

    void check_bool(const std::string& desc, bool lhs, bool rhs)
    {
        checks.push_back({desc, lhs ? "true" : "false", rhs ? "true" : "false", lhs == rhs});
    }

    void check_ge(const std::string& desc, const Dim& lhs, std::uint64_t rhs)
    {
        // INFINITE counts as >= anything.
        bool ok = !lhs || *lhs >= rhs;
        checks.push_back({desc, dim_str(lhs), ">=" + std::to_string(rhs), ok});
    }

    void mark_na(const std::string& reason)
    {
        not_applicable = true;
        na_reason = reason;
    }
};

// Machine format: one check per line, tab separated.
inline std::string machine_lines(const TheoremReport& rep)
{
    std::ostringstream out;
    if (rep.not_applicable) {
        out << rep.theorem_id << '\t' << rep.ring_label << '\t'
            << "N/A: " + rep.na_reason << '\t' << "-" << '\t' << "-" << '\t' << "na" << '\n';
        return out.str();
    }
    for (const auto& c : rep.checks)
        out << rep.theorem_id << '\t' << rep.ring_label << '\t' << c.description << '\t' << c.lhs
            << '\t' << c.rhs << '\t' << (c.pass ? "pass" : "FAIL") << '\n';
    return out.str();
}

inline std::string human_report(const TheoremReport& rep)
{
    std::ostringstream out;
    out << "== " << rep.theorem_id << " on " << rep.ring_label;
    if (!rep.parameters.empty()) out << " " << rep.parameters;
    out << " ==\n";
    if (rep.not_applicable) {
        out << "  N/A: " << rep.na_reason << "\n";
        return out.str();
    }
    for (const auto& c : rep.checks)
        out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.description << ": " << c.lhs
            << " vs " << c.rhs << "\n";
    out << "  overall: " << (rep.overall() ? "pass" : "FAIL") << "\n";
    return out.str();
}

}  // namespace syzlab
