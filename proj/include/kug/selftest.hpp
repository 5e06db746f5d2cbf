#pragma once

// Invariant suites run by `kug selftest`. Each suite either passes, fails with
// a message, or is skipped because the oracle budget is too small.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kug/kug.hpp"

namespace kug::selftest {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

struct SuiteResult {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    double seconds = 0;
};

struct Options {
    std::uint64_t budget = oracle::default_budget;
    std::filesystem::path scratch_dir; // cold-cache directory for the transparency suite
};

namespace detail {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<mpz_class> partition_numbers(int up_to) {
    std::vector<mpz_class> p(static_cast<std::size_t>(up_to + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= up_to; ++m) {
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

inline std::string combinatorics_suite() {
    const auto pn = partition_numbers(12);
    for (int n = 0; n <= 12; ++n) {
        const auto parts = partitions_of(n);
        check(parts.size() == pn[static_cast<std::size_t>(n)], "p(" + std::to_string(n) + ") mismatch");
        for (const Partition& l : parts) check(conjugate(conjugate(l)) == l, "conjugate is not an involution");
        if (n <= 10) {
            mpz_class total = 0;
            for (const Partition& r : parts) total += factorial(n) / z_stat(r);
            check(total == factorial(n), "class equation of S_" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (const Composition& mu : compositions_of(n)) {
            mpz_class weights = 0, signed_sum = 0, order = 1;
            for (int b : mu.parts()) order *= factorial(b);
            for (const auto& t : levi_signed_cycle_types(mu)) {
                weights += t.weight;
                signed_sum += t.sign * t.weight;
            }
            check(weights == order, "levi weights for " + mu.to_string());
            check(signed_sum == (mu.is_borel() ? 1 : 0), "levi sign sum for " + mu.to_string());
        }
    return "partitions n<=12, levi classes n<=8";
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_deg, int bits) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(static_cast<unsigned long>(rng()));
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng) + 1));
    for (mpz_class& x : c) {
        x = gr.get_z_bits(static_cast<unsigned long>(bits));
        if (rng() & 1) x = -x;
    }
    return IntPoly(std::move(c));
}

inline std::string poly_suite() {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(rng, 40, 128), b = random_poly(rng, 40, 128), c = random_poly(rng, 40, 128);
        check((a * b) * c == a * (b * c), "associativity");
        check(a * (b + c) == a * b + a * c, "distributivity");
        check(a - a == IntPoly(), "additive inverse");
        mpz_class x = static_cast<long>(rng() % 1000) - 500;
        check(eval_int(a * b, x) == eval_int(a, x) * eval_int(b, x), "evaluation is multiplicative");
        if (!b.is_zero()) check(exact_div(a * b, b) == a, "exact division");
        mpz_class shift = static_cast<long>(rng() % 7) - 3;
        check(expand_from_basis(rebase(a, shift), shift) == a, "rebase round trip");
    }
    return "100 random instances, degree <= 40, 128-bit coefficients";
}

inline std::string green_suite(GreenTables& tables) {
    for (int n = 1; n <= 8; ++n) {
        const SnCharacterTable chars = SnCharacterTable::compute(n);
        const std::size_t np = chars.parts.size();
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < np; ++b) {
                mpq_class s = 0;
                for (std::size_t r = 0; r < np; ++r)
                    s += mpq_class(chars.values[a][r] * chars.values[b][r]) / z_stat(chars.parts[r]);
                check(s == (a == b ? 1 : 0), "row orthogonality for n = " + std::to_string(n));
            }
    }
    for (int n = 1; n <= 10; ++n) {
        const GreenTable& g = tables.get(n);
        for (std::size_t r = 0; r < g.partitions().size(); ++r)
            check(g.at(0, r) == IntPoly::one(), "Q^(n)_rho != 1 for n = " + std::to_string(n));
        const std::size_t ones = g.partitions().size() - 1;
        for (std::size_t l = 0; l < g.partitions().size(); ++l)
            check(g.at(l, ones).degree() == n_stat(g.partitions()[l]), "deg Q^lambda_(1^n) != n(lambda)");
    }
    for (int n = 1; n <= 7; ++n)
        for (const Partition& mu : partitions_of(n))
            for (const Partition& lambda : partitions_of(n)) {
                const IntPoly k = kostka_foulkes(mu, lambda);
                check(eval_int(k, mpz_class(1)) == ssyt_enumerate(mu, lambda).size(), "K(1) != #SSYT");
            }
    return "characters n<=8, Green tables n<=10, Kostka-Foulkes n<=7";
}

inline std::string group_data_suite() {
    for (int n = 1; n <= 10; ++n) {
        const IntPoly g = gl_order(n).polynomial();
        IntPoly total;
        for (const Partition& l : partitions_of(n)) {
            total += exact_div(g, centralizer_order(l).polynomial());
            const Partition dual = conjugate(l);
            long dual_sq = 0;
            for (int c : dual.parts()) dual_sq += static_cast<long>(c) * c;
            check(centralizer_order(l).polynomial().degree() == dual_sq, "dim C_G(u) != sum lambda'_i^2");
        }
        check(total == unipotent_total(n), "class equation for n = " + std::to_string(n));
    }
    return "class equation n<=10";
}

inline std::string counting_suite(GreenTables& tables) {
    for (int n = table1::min_n; n <= table1::max_n; ++n) {
        const Counter c(tables.get(n));
        const CountResult r = c.k_unipotent(Composition::borel(n));
        check(r.polynomial == table1::row(n), "table row " + std::to_string(n));
        check(c.k_via_lemma(Composition::borel(n)) == r.polynomial, "lemma path for Borel n = " + std::to_string(n));
        check(r.qminus1_nonneg, "(q-1)-positivity for n = " + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        const Counter c(tables.get(n));
        for (const Composition& mu : compositions_of(n))
            check(c.k_unipotent(mu).polynomial == c.k_via_lemma(mu), "path equality for " + mu.to_string());
        associated_invariance(n, tables);
        check(c.k_unipotent(Composition{n}).polynomial == unipotent_total(n), "trivial radical law");
    }
    return "Borel table n=2..10, both paths n<=6, associated parabolics n<=6";
}

inline std::string oracle_suite(std::uint64_t budget, GreenTables& tables) {
    // Cheapest scene first so a small budget skips before doing any work.
    const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {3, 5}, {4, 2}};
    std::mt19937_64 rng(7);
    int scenes = 0;
    for (auto [n, p] : cases) {
        auto unip = oracle::UnipotentSet::build(n, p, budget);
        const Counter c(tables.get(n));
        std::vector<Composition> levis = (n <= 3 || p == 2) ? compositions_of(n) : std::vector{Composition::borel(n)};
        for (const Composition& mu : levis) {
            const auto scene = oracle::OracleScene::build(mu, unip, budget);
            const std::uint64_t k = oracle::burnside_count(scene);
            check(eval_int(c.k_unipotent(mu).polynomial, p) == k,
                  "oracle mismatch for levi " + mu.to_string() + " at p = " + std::to_string(p));
            check(oracle::commuting_variety_count(scene) == scene.radical.size() * k, "commuting variety identity");
            ++scenes;
        }
        if (n <= 3) {
            const auto g = oracle::random_invertible(n, p, rng);
            const auto scene = oracle::OracleScene::build(Composition::borel(n), unip, budget);
            check(oracle::burnside_count(scene.conjugated(g)) == oracle::burnside_count(scene), "conjugate invariance");
            for (const Partition& l : partitions_of(n)) {
                check(oracle::flag_fixed_points(l, p, budget) ==
                          eval_int(tables.get(n).at(l, Partition::column(n)), p),
                      "flag count for " + l.to_string());
                const auto cc = oracle::centralizer_count(oracle::jordan_representative(l, p), budget);
                const CentralizerDatum cd = centralizer_datum(l);
                check(cd.full_order.eval(p) == cc.group_order, "centralizer order for " + l.to_string());
                check(eval_int(q_power(static_cast<std::size_t>(cd.unipotent_count_exponent)), p) ==
                          cc.unipotent_order,
                      "unipotent centralizer count for " + l.to_string());
            }
        }
    }
    return std::to_string(scenes) + " scenes";
}

inline std::string cache_suite(const std::filesystem::path& scratch) {
    std::error_code ec;
    std::filesystem::remove_all(scratch, ec);
    auto render = [](GreenTables& t) {
        std::string out;
        for (int n = 1; n <= 8; ++n)
            for (const Composition& mu : compositions_of(n))
                if (n <= 5 || mu.is_borel()) out += to_json(k_unipotent(n, mu, t)).dump() + "\n";
        return out;
    };
    GreenTables none;
    GreenTables cold{TableCache(scratch)};
    const std::string a = render(none), b = render(cold);
    GreenTables hot{TableCache(scratch)};
    const std::string c = render(hot);
    check(a == b && b == c, "outputs differ between no cache, cold cache and hot cache");
    // A damaged file must be ignored, not trusted.
    {
        std::ofstream f(TableCache(scratch).file_for(4), std::ios::trunc);
        f << cache_version << " n=4\nchar 4 4 4 oops\n";
    }
    GreenTables damaged{TableCache(scratch)};
    check(render(damaged) == a, "damaged cache changed results");
    std::filesystem::remove_all(scratch, ec);
    return "byte-identical with no, cold, hot and damaged cache";
}

} // namespace detail

inline std::vector<SuiteResult> run(const Options& opt) {
    GreenTables tables;
    std::vector<std::pair<std::string, std::function<std::string()>>> suites{
        {"combinatorics", [] { return detail::combinatorics_suite(); }},
        {"exact-poly", [] { return detail::poly_suite(); }},
        {"green-functions", [&] { return detail::green_suite(tables); }},
        {"group-data", [] { return detail::group_data_suite(); }},
        {"counting", [&] { return detail::counting_suite(tables); }},
        {"oracle", [&] { return detail::oracle_suite(opt.budget, tables); }},
        {"cache", [&] {
             auto dir = opt.scratch_dir.empty() ? std::filesystem::temp_directory_path() /
                                                      ("kug-selftest-" + std::to_string(std::random_device{}()))
                                                : opt.scratch_dir;
             return detail::cache_suite(dir);
         }},
    };
    std::vector<SuiteResult> out;
    for (auto& [name, fn] : suites) {
        SuiteResult r{name, Status::pass, "", 0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = fn();
        } catch (const BudgetError& e) {
            r.status = Status::skipped;
            r.detail = std::string("skipped: budget (") + e.what() + ")";
        } catch (const std::exception& e) {
            r.status = Status::fail;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace kug::selftest
