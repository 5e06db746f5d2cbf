#pragma once

// Published k(U_n(q), GL_n(q)_uni) for the Borel radical, n = 2..10.
// Coefficients low to high, one row per n.

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>

#include "kug/cache.hpp"
#include "kug/errors.hpp"
#include "kug/poly.hpp"

namespace kug::table1 {

inline constexpr std::pair<int, std::string_view> rows[] = {
    {2, "-1,2"},
    {3, "0,-3,3,1"},
    {4, "0,4,-9,0,5,0,1"},
    {5, "-1,-4,21,-10,-20,6,4,4,0,0,1"},
    {6, "0,5,-31,25,52,-44,-20,1,-5,13,-1,5,0,0,0,1"},
    {7, "-1,-5,50,-51,-120,139,71,-12,-57,-49,37,-41,22,13,-1,-1,6,0,0,0,0,1"},
    {8, "0,6,-64,87,207,-322,-164,102,160,225,-93,-86,-125,39,39,-54,7,13,19,-1,-1,-1,7,0,0,0,0,0,1"},
    {9, "0,-7,89,-145,-319,568,326,60,-971,-807,1315,-121,290,177,-458,119,-134,57,-119,25,9,41,-44,19,26,-1,-1,-1,-1,8,"
        "0,0,0,0,0,0,1"},
    {10, "0,8,-108,210,455,-1017,-293,-808,3298,944,-2676,-691,-2400,4050,-1227,-1299,3300,-1384,126,-174,-674,259,474,"
         "-395,-258,251,-41,68,-8,-54,26,34,-1,-1,-1,-1,-1,9,0,0,0,0,0,0,0,1"},
};

inline constexpr int min_n = 2;
inline constexpr int max_n = 10;

// FNV-1a 64 over every row text followed by '\n', in order.
inline constexpr std::uint64_t expected_checksum = 0x2c09d047e78c53ddULL;

constexpr std::uint64_t checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    };
    for (const auto& [n, text] : rows) {
        for (char c : text) mix(c);
        mix('\n');
    }
    return h;
}

static_assert(checksum() == expected_checksum, "Borel table transcription checksum mismatch");

inline const std::map<int, IntPoly>& corpus() {
    static const std::map<int, IntPoly> data = [] {
        std::map<int, IntPoly> m;
        for (const auto& [n, text] : rows) {
            IntPoly p = detail::parse_coeff_list(std::string(text));
            if (p.degree() != static_cast<long>(n) * (n - 1) / 2 || (n >= 3 && p.leading() != 1))
                throw InvariantError("table row " + std::to_string(n) + " breaks the degree law");
            m.emplace(n, std::move(p));
        }
        return m;
    }();
    return data;
}

inline const IntPoly& row(int n) {
    auto it = corpus().find(n);
    if (it == corpus().end()) throw InputError("no published row for n = " + std::to_string(n));
    return it->second;
}

} // namespace kug::table1
