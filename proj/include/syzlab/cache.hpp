#pragma once

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "syzlab/resolution.hpp"

namespace syzlab {

// Content-addressed file store. Writes go through a temp file and a rename,
// so concurrent writers of the same key are last-writer-wins on identical
// content.
class CacheStore {
public:
    CacheStore() = default;
    explicit CacheStore(std::string dir) : dir_(std::move(dir))
    {
        if (!dir_.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir_, ec);
            if (ec) throw Error(Errc::io_error, "cannot create cache directory " + dir_);
        }
    }

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }

    std::optional<std::string> load(const std::string& name) const
    {
        if (!enabled()) return std::nullopt;
        std::ifstream in(std::filesystem::path(dir_) / name, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void store(const std::string& name, const std::string& content) const
    {
        if (!enabled()) return;
        auto path = std::filesystem::path(dir_) / name;
        auto tmp = std::filesystem::path(dir_) /
                   (name + ".tmp." + std::to_string(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw Error(Errc::io_error, "cannot write cache file " + tmp.string());
            out << content;
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw Error(Errc::io_error, "cannot publish cache file " + path.string());
        }
    }

    std::vector<std::string> list_prefix(const std::string& prefix) const
    {
        std::vector<std::string> out;
        if (!enabled()) return out;
        std::error_code ec;
        for (auto it = std::filesystem::directory_iterator(dir_, ec);
             !ec && it != std::filesystem::directory_iterator(); ++it) {
            std::string name = it->path().filename().string();
            if (name.rfind(prefix, 0) == 0) out.push_back(name);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::string dir_;
};

namespace detail {

inline std::string twists_line(const std::optional<std::vector<int>>& t)
{
    if (!t) return "?";
    std::string s;
    for (std::size_t i = 0; i < t->size(); ++i) {
        if (i) s += ",";
        s += std::to_string((*t)[i]);
    }
    return s.empty() ? "-" : s;
}

inline std::optional<std::vector<int>> parse_twists_line(const std::string& s)
{
    if (s == "?") return std::nullopt;
    std::vector<int> out;
    if (s == "-") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

}  // namespace detail

// Resolution serialization; differentials are stored entry by entry in the
// polynomial text grammar for a bit-exact reload.
inline std::string serialize_resolution(const Resolution& r)
{
    const auto& vars = r.ring()->desc().vars;
    std::ostringstream out;
    out << "syzres 1\n";
    out << "ring " << to_hex64(r.ring()->hash()) << "\n";
    out << "b0 " << r.betti(0) << "\n";
    out << "minimal " << (r.minimal() ? 1 : 0) << "\n";
    out << "levels " << r.computed_to() << "\n";
    out << "twists " << detail::twists_line(r.twists(0)) << "\n";
    for (std::size_t i = 1; i <= r.computed_to(); ++i) {
        const SparseMat& d = r.diff(i);
        out << "diff " << i << " rows " << d.rows << " cols " << d.ncols() << "\n";
        out << "twists " << detail::twists_line(r.twists(i)) << "\n";
        for (std::size_t j = 0; j < d.ncols(); ++j) {
            out << "c " << j;
            for (const auto& e : d.cols[j].entries())
                out << " " << e.first << ":" << print_polynomial(e.second, vars) << ";";
            out << "\n";
        }
    }
    return out.str();
}

inline std::optional<Resolution> parse_resolution(const std::string& text, const RingPtr& ring)
{
    std::istringstream in(text);
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "syzres" || version != 1) return std::nullopt;
    std::string hex;
    if (!(in >> word >> hex) || word != "ring" || hex != to_hex64(ring->hash())) return std::nullopt;
    std::size_t b0 = 0, levels = 0;
    int minimal = 1;
    if (!(in >> word >> b0) || word != "b0") return std::nullopt;
    if (!(in >> word >> minimal) || word != "minimal") return std::nullopt;
    if (!(in >> word >> levels) || word != "levels") return std::nullopt;
    std::string tw;
    if (!(in >> word >> tw) || word != "twists") return std::nullopt;
    std::vector<std::optional<std::vector<int>>> twists;
    twists.push_back(detail::parse_twists_line(tw));

    const auto& vars = ring->desc().vars;
    const PrimeField& F = ring->field();
    std::vector<SparseMat> diffs;
    for (std::size_t i = 1; i <= levels; ++i) {
        std::size_t idx = 0, rows = 0, cols = 0;
        if (!(in >> word >> idx) || word != "diff" || idx != i) return std::nullopt;
        if (!(in >> word >> rows) || word != "rows") return std::nullopt;
        if (!(in >> word >> cols) || word != "cols") return std::nullopt;
        if (!(in >> word >> tw) || word != "twists") return std::nullopt;
        twists.push_back(detail::parse_twists_line(tw));
        SparseMat d;
        d.rows = rows;
        for (std::size_t j = 0; j < cols; ++j) {
            std::size_t cj = 0;
            if (!(in >> word >> cj) || word != "c" || cj != j) return std::nullopt;
            std::string rest;
            std::getline(in, rest);
            std::vector<FreeVector::Entry> es;
            std::size_t pos = 0;
            while (pos < rest.size()) {
                while (pos < rest.size() && rest[pos] == ' ') ++pos;
                if (pos >= rest.size()) break;
                std::size_t colon = rest.find(':', pos);
                if (colon == std::string::npos) return std::nullopt;
                std::uint32_t comp =
                    static_cast<std::uint32_t>(std::stoul(rest.substr(pos, colon - pos)));
                std::size_t semi = rest.find(';', colon);
                if (semi == std::string::npos) return std::nullopt;
                Polynomial p;
                try {
                    p = parse_polynomial(rest.substr(colon + 1, semi - colon - 1), vars, F);
                } catch (const Error&) {
                    return std::nullopt;
                }
                es.emplace_back(comp, std::move(p));
                pos = semi + 1;
            }
            d.cols.push_back(FreeVector::from_sorted(std::move(es)));
        }
        diffs.push_back(std::move(d));
    }
    return Resolution::from_parts(ring, b0, std::move(twists), std::move(diffs), minimal != 0);
}

}  // namespace syzlab
