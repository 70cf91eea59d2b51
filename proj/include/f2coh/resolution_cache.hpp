#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "f2coh/resolution.hpp"

namespace f2coh {

inline constexpr int kCacheVersion = 1;

// F2COH_CACHE_DIR, else $XDG_CACHE_HOME/f2coh, else $HOME/.cache/f2coh, else ./.f2coh-cache.
inline std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("F2COH_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "f2coh";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "f2coh";
    return ".f2coh-cache";
}

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t resolution_digest(const Resolution& r) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto k : r.ranks) h = fnv1a(h, k);
    for (int i = 1; i <= r.window(); ++i)
        for (auto e : r.differential(i).entries()) h = fnv1a(h, e);
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::uint64_t from_hex(const std::string& s) {
    if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw std::invalid_argument("bad hex field");
    return std::stoull(s, nullptr, 16);
}

}  // namespace detail

inline nlohmann::json resolution_to_json(const Resolution& r) {
    nlohmann::json j;
    j["version"] = kCacheVersion;
    j["group"] = r.group->label();
    j["builder"] = r.builder;
    j["ranks"] = r.ranks;
    nlohmann::json diffs = nlohmann::json::array();
    for (int i = 1; i <= r.window(); ++i) {
        const auto& d = r.differential(i);
        nlohmann::json e = nlohmann::json::array();
        for (auto v : d.entries()) e.push_back(detail::to_hex(v));
        diffs.push_back({{"dst", d.dst_rank()}, {"src", d.src_rank()}, {"supports", std::move(e)}});
    }
    j["diffs"] = std::move(diffs);
    j["digest"] = detail::to_hex(detail::resolution_digest(r));
    return j;
}

// Throws on any structural problem; exactness is left to verify_resolution.
inline ResolutionPtr resolution_from_json(const nlohmann::json& j, const GroupPtr& g) {
    if (j.at("version").get<int>() != kCacheVersion) throw std::invalid_argument("cache version mismatch");
    if (j.at("group").get<std::string>() != g->label()) throw std::invalid_argument("cache is for another group");
    auto r = std::make_shared<Resolution>();
    r->group = g;
    r->builder = j.at("builder").get<std::string>();
    r->ranks = j.at("ranks").get<std::vector<std::size_t>>();
    const auto& diffs = j.at("diffs");
    if (r->ranks.empty() || diffs.size() + 1 != r->ranks.size()) throw std::invalid_argument("cache rank/differential count mismatch");
    r->diffs.emplace_back();
    const std::uint64_t mask = g->order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g->order()) - 1;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        const std::size_t dst = diffs[i].at("dst"), src = diffs[i].at("src");
        if (dst != r->ranks[i] || src != r->ranks[i + 1]) throw std::invalid_argument("cache differential shape mismatch");
        const auto& s = diffs[i].at("supports");
        if (s.size() != dst * src) throw std::invalid_argument("cache support count mismatch");
        ModuleMap m(g, dst, src);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const std::uint64_t v = detail::from_hex(s[k].get<std::string>());
            if (v & ~mask) throw std::invalid_argument("cache support outside the group");
            m.set(k / src, k % src, v);
        }
        r->diffs.push_back(std::move(m));
    }
    if (detail::from_hex(j.at("digest").get<std::string>()) != detail::resolution_digest(*r))
        throw std::invalid_argument("cache digest mismatch");
    return r;
}

enum class CacheOutcome { Hit, Miss, Rebuilt, Disabled };

inline std::string to_string(CacheOutcome o) {
    switch (o) {
        case CacheOutcome::Hit: return "hit";
        case CacheOutcome::Miss: return "miss";
        case CacheOutcome::Rebuilt: return "rebuilt";
        case CacheOutcome::Disabled: return "disabled";
    }
    return "?";
}

struct CachedResolution {
    ResolutionPtr resolution;
    CacheOutcome outcome = CacheOutcome::Disabled;
    std::string note;  // why a cached file was rejected
};

class ResolutionCache {
public:
    explicit ResolutionCache(std::filesystem::path dir = default_cache_dir()) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path file_for(const Group& g, const std::string& builder, int window) const {
        return dir_ / (g.label() + "-" + builder + "-w" + std::to_string(window) + ".json");
    }

    // Cached files are re-verified; a corrupt or inexact one is discarded and rebuilt.
    CachedResolution get(const GroupPtr& g, const std::string& builder, int window) const {
        const auto path = file_for(*g, builder, window);
        CachedResolution out;
        if (std::filesystem::exists(path)) {
            try {
                std::ifstream in(path);
                const auto j = nlohmann::json::parse(in);
                auto r = resolution_from_json(j, g);
                if (r->builder != builder || r->window() != window) throw std::invalid_argument("cache parameters mismatch");
                const auto rep = verify_resolution(*r);
                if (!rep.ok) throw std::invalid_argument("cached resolution fails verification: " + rep.message);
                out.resolution = std::move(r);
                out.outcome = CacheOutcome::Hit;
                return out;
            } catch (const std::exception& e) {
                out.note = e.what();
                out.outcome = CacheOutcome::Rebuilt;
            }
        } else {
            out.outcome = CacheOutcome::Miss;
        }
        out.resolution = build_resolution(g, builder, window);
        store(*out.resolution, path);
        return out;
    }

    std::size_t clear() const {
        std::size_t removed = 0;
        if (!std::filesystem::exists(dir_)) return 0;
        for (const auto& e : std::filesystem::directory_iterator(dir_))
            if (e.is_regular_file() && e.path().extension() == ".json") removed += std::filesystem::remove(e.path());
        return removed;
    }

private:
    static void store(const Resolution& r, const std::filesystem::path& path) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;  // an unwritable cache is not an error
            out << resolution_to_json(r).dump();
        }
        std::filesystem::rename(tmp, path, ec);
    }

    std::filesystem::path dir_;
};

}  // namespace f2coh
