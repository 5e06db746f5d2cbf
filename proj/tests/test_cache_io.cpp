#include "catch_amalgamated.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "kug/cache.hpp"
#include "kug/counting.hpp"
#include "kug/io.hpp"

using namespace kug;
namespace fs = std::filesystem;

namespace {

struct ScratchDir {
    fs::path path;
    ScratchDir() {
        path = fs::temp_directory_path() / ("kug-test-" + std::to_string(std::random_device{}()));
        fs::remove_all(path);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

bool same_table(const GreenTable& a, const GreenTable& b) {
    if (a.partitions() != b.partitions()) return false;
    for (std::size_t i = 0; i < a.partitions().size(); ++i)
        for (std::size_t j = 0; j < a.partitions().size(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("cold, hot and damaged caches give the same tables") {
    ScratchDir dir;
    GreenTables plain;
    for (int n : {1, 4, 6}) {
        GreenTables cold{TableCache(dir.path)};
        CHECK(same_table(cold.get(n), plain.get(n)));
        REQUIRE(fs::exists(TableCache(dir.path).file_for(n)));

        GreenTables hot{TableCache(dir.path)};
        CHECK(same_table(hot.get(n), plain.get(n)));
        CHECK(TableCache(dir.path).load(n).has_value());
    }

    // Truncate the file: load refuses it and the tables are rebuilt.
    const fs::path f = TableCache(dir.path).file_for(6);
    const auto full = fs::file_size(f);
    fs::resize_file(f, full / 2);
    CHECK_FALSE(TableCache(dir.path).load(6).has_value());
    GreenTables repaired{TableCache(dir.path)};
    CHECK(same_table(repaired.get(6), plain.get(6)));
    CHECK(TableCache(dir.path).load(6).has_value());

    // Wrong version line.
    {
        std::ofstream out(f, std::ios::trunc);
        out << "kug-table-cache v0 n=6\n";
    }
    CHECK_FALSE(TableCache(dir.path).load(6).has_value());

    // Garbage coefficient.
    {
        std::ofstream out(TableCache(dir.path).file_for(1), std::ios::trunc);
        out << cache_version << " n=1\nchar 1 1 1 1\nkostka 1 1 1 x\n";
    }
    CHECK_FALSE(TableCache(dir.path).load(1).has_value());
}

TEST_CASE("counts are the same with and without a cache") {
    ScratchDir dir;
    GreenTables plain;
    GreenTables cached{TableCache(dir.path)};
    GreenTables hot{TableCache(dir.path)};
    for (int n = 2; n <= 5; ++n)
        for (const Composition& mu : compositions_of(n)) {
            const auto a = to_json(k_unipotent(n, mu, plain)).dump();
            CHECK(to_json(k_unipotent(n, mu, cached)).dump() == a);
            CHECK(to_json(k_unipotent(n, mu, hot)).dump() == a);
        }
}

TEST_CASE("unwritable cache directory is not fatal") {
    GreenTables t{TableCache("/proc/kug-no-such-dir")};
    CHECK(t.get(3).at({1, 1, 1}, {1, 1, 1}) == green_polynomial({1, 1, 1}, {1, 1, 1}));
}

TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir("/tmp/x") == fs::path("/tmp/x"));
    ::setenv(cache_env_var, "/tmp/from-env", 1);
    CHECK(resolve_cache_dir("") == fs::path("/tmp/from-env"));
    ::unsetenv(cache_env_var);
    CHECK_FALSE(resolve_cache_dir("").empty());
}

TEST_CASE("CountResult JSON and CSV") {
    const CountResult r = k_unipotent(2, {1, 1});
    const json j = to_json(r);
    CHECK(j["n"] == 2);
    CHECK(j["levi"] == json::array({1, 1}));
    CHECK(j["coeffs_low_to_high"] == json::array({"-1", "2"}));
    CHECK(j["qminus1_coeffs"] == json::array({"1", "2"}));
    CHECK(j["qminus1_nonneg"] == true);
    CHECK(j["per_class"].contains("1,1"));
    CHECK(intpoly_from_json(j["coeffs_low_to_high"]) == r.polynomial);
    CHECK(csv_header() == "n,levi,degree,coeffs_low_to_high");
    CHECK(to_csv_row(r) == "2,1;1,1,-1;2");
}
