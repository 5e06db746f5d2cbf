#pragma once

// Line-based disk cache for character and Kostka-Foulkes tables, and a
// per-process registry of Green tables. The cache only accelerates; any file
// that fails to parse or is incomplete is ignored and rewritten.
//
// File layout, one file per n:
//   kug-table-cache v1 n=<n>
//   char <n> <mu> <rho> <value>
//   kostka <n> <mu> <lambda> <coeffs>
// with partitions comma-joined and coefficients comma-joined low to high
// ("0" for the zero polynomial).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "kug/combinatorics.hpp"
#include "kug/green.hpp"
#include "kug/poly.hpp"

namespace kug {

inline constexpr const char* cache_env_var = "KUG_CACHE_DIR";
inline constexpr const char* cache_version = "kug-table-cache v1";

/// Flag value if given, then $KUG_CACHE_DIR, then $XDG_CACHE_HOME/kug, then ~/.cache/kug.
inline std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(cache_env_var); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kug";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "kug";
    return std::filesystem::temp_directory_path() / "kug-cache";
}

namespace detail {

inline std::string coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

inline IntPoly parse_coeff_list(const std::string& text) {
    std::vector<mpz_class> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpz_class v;
        if (tok.empty() || v.set_str(tok, 10) != 0) throw std::runtime_error("bad coefficient");
        c.push_back(v);
    }
    return IntPoly(std::move(c));
}

} // namespace detail

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path file_for(int n) const { return dir_ / ("tables-n" + std::to_string(n) + ".txt"); }

    // Both tables for n, or nothing if the file is missing, stale or damaged.
    std::optional<std::pair<SnCharacterTable, KostkaFoulkesTable>> load(int n) const {
        std::ifstream in(file_for(n));
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line) || line != std::string(cache_version) + " n=" + std::to_string(n)) return std::nullopt;

        SnCharacterTable chars;
        KostkaFoulkesTable kf;
        chars.n = kf.n = n;
        chars.parts = kf.parts = partitions_of(n);
        std::map<Partition, std::size_t> index;
        for (std::size_t i = 0; i < chars.parts.size(); ++i) index.emplace(chars.parts[i], i);
        const std::size_t np = chars.parts.size();
        chars.values.assign(np, std::vector<mpz_class>(np));
        kf.entries.assign(np, std::vector<IntPoly>(np));
        std::vector<std::vector<bool>> seen_char(np, std::vector<bool>(np)), seen_kf(np, std::vector<bool>(np));

        try {
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                std::istringstream ls(line);
                std::string kind, a, b, payload;
                int nn = -1;
                if (!(ls >> kind >> nn >> a >> b >> payload) || nn != n) return std::nullopt;
                auto ia = index.find(Partition::parse(a));
                auto ib = index.find(Partition::parse(b));
                if (ia == index.end() || ib == index.end()) return std::nullopt;
                if (kind == "char") {
                    if (chars.values[ia->second][ib->second].set_str(payload, 10) != 0) return std::nullopt;
                    seen_char[ia->second][ib->second] = true;
                } else if (kind == "kostka") {
                    kf.entries[ia->second][ib->second] = detail::parse_coeff_list(payload);
                    seen_kf[ia->second][ib->second] = true;
                } else {
                    return std::nullopt;
                }
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = 0; j < np; ++j)
                if (!seen_char[i][j] || !seen_kf[i][j]) return std::nullopt;
        return std::make_pair(std::move(chars), std::move(kf));
    }

    // Best effort; an unwritable directory leaves the cache cold.
    bool store(const SnCharacterTable& chars, const KostkaFoulkesTable& kf) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        const auto target = file_for(chars.n);
        const auto tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return false;
            out << cache_version << " n=" << chars.n << '\n';
            for (std::size_t i = 0; i < chars.parts.size(); ++i)
                for (std::size_t j = 0; j < chars.parts.size(); ++j)
                    out << "char " << chars.n << ' ' << chars.parts[i].to_string() << ' ' << chars.parts[j].to_string()
                        << ' ' << chars.values[i][j].get_str() << '\n';
            for (std::size_t i = 0; i < kf.parts.size(); ++i)
                for (std::size_t j = 0; j < kf.parts.size(); ++j)
                    out << "kostka " << kf.n << ' ' << kf.parts[i].to_string() << ' ' << kf.parts[j].to_string() << ' '
                        << detail::coeff_list(kf.entries[i][j]) << '\n';
            if (!out) return false;
        }
        std::filesystem::rename(tmp, target, ec);
        return !ec;
    }

private:
    std::filesystem::path dir_;
};

/// Green tables by n, built once per process. With a disk cache attached the
/// character and Kostka-Foulkes tables are read from, or written to, disk.
class GreenTables {
public:
    GreenTables() = default;
    explicit GreenTables(std::optional<TableCache> cache) : cache_(std::move(cache)) {}

    const GreenTable& get(int n) {
        check_rank(n);
        std::lock_guard lock(mutex_);
        auto it = tables_.find(n);
        if (it != tables_.end()) return *it->second;
        return *tables_.emplace(n, std::make_unique<GreenTable>(build(n))).first->second;
    }

    static GreenTables& shared() {
        static GreenTables instance;
        return instance;
    }

private:
    GreenTable build(int n) const {
        if (cache_) {
            if (auto hit = cache_->load(n)) return GreenTable::from_tables(hit->first, hit->second);
        }
        SnCharacterTable chars = SnCharacterTable::compute(n);
        KostkaFoulkesTable kf = KostkaFoulkesTable::compute(n);
        if (cache_) cache_->store(chars, kf);
        return GreenTable::from_tables(chars, kf);
    }

    std::optional<TableCache> cache_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<GreenTable>> tables_;
};

} // namespace kug
