// kug: exact counts of U-conjugacy classes of unipotent elements in GL_n(q).
//
// Exit codes: 0 success, 1 verified mismatch or invariant failure,
// 2 invalid input or budget refusal.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kug/kug.hpp"
#include "kug/selftest.hpp"

namespace {

using namespace kug;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct Config {
    int n = 0;
    std::string levi;
    bool all_levis = false;
    std::string primes = "2,3,5";
    std::string format = "text";
    bool json_flag = false;
    std::string cache_dir;
    bool no_cache = false;
    std::uint64_t budget = oracle::default_budget;
    int max_n = 10;
    std::string lambda;
    std::string rho;
};

GreenTables make_tables(const Config& cfg) {
    if (cfg.no_cache) return GreenTables();
    return GreenTables(TableCache(resolve_cache_dir(cfg.cache_dir)));
}

std::string output_format(const Config& cfg) { return cfg.json_flag ? "json" : cfg.format; }

Composition levi_for(const Config& cfg) {
    if (cfg.levi.empty()) return Composition::borel(cfg.n);
    return Composition::parse(cfg.levi);
}

int cmd_compute(const Config& cfg) {
    if (cfg.n < 1) throw InputError("--n must be at least 1");
    GreenTables tables = make_tables(cfg);
    std::vector<Composition> levis = cfg.all_levis ? compositions_of(cfg.n) : std::vector{levi_for(cfg)};
    const std::string fmt = output_format(cfg);
    json all = json::array();
    if (fmt == "csv") std::cout << csv_header() << '\n';
    for (const Composition& mu : levis) {
        check_levi(cfg.n, mu);
        const CountResult r = k_unipotent(cfg.n, mu, tables);
        if (fmt == "json") all.push_back(to_json(r));
        else if (fmt == "csv") std::cout << to_csv_row(r) << '\n';
        else if (levis.size() == 1) std::cout << to_string(r.polynomial) << '\n';
        else std::cout << mu.to_string() << ": " << to_string(r.polynomial) << '\n';
    }
    if (fmt == "json") std::cout << (levis.size() == 1 ? all.front() : all).dump() << '\n';
    return exit_ok;
}

int cmd_table(const Config& cfg) {
    if (cfg.max_n > table1::max_n) throw InputError("--max-n must be at most " + std::to_string(table1::max_n));
    GreenTables tables = make_tables(cfg);
    const std::string fmt = output_format(cfg);
    json rows = json::array();
    int status = exit_ok;
    for (int n = table1::min_n; n <= cfg.max_n; ++n) {
        const IntPoly computed = k_unipotent(n, Composition::borel(n), tables).polynomial;
        const IntPoly& published = table1::row(n);
        std::optional<std::size_t> bad;
        const std::size_t len = std::max(computed.coeffs().size(), published.coeffs().size());
        for (std::size_t i = 0; i < len && !bad; ++i)
            if (computed.coeff(i) != published.coeff(i)) bad = i;
        if (fmt == "json") {
            json row{{"n", n}, {"match", !bad}, {"coeffs_low_to_high", to_json(computed)}};
            if (bad) row["first_mismatch"] = {{"power", *bad},
                                              {"computed", computed.coeff(*bad).get_str()},
                                              {"published", published.coeff(*bad).get_str()}};
            rows.push_back(row);
        } else if (fmt == "csv") {
            if (n == table1::min_n) std::cout << "n,match,coeffs_low_to_high\n";
            std::string coeffs;
            for (std::size_t i = 0; i < computed.coeffs().size(); ++i) coeffs += (i ? ";" : "") + computed.coeffs()[i].get_str();
            std::cout << n << ',' << (bad ? "false" : "true") << ',' << coeffs << '\n';
        } else if (bad) {
            std::cout << "n=" << n << " MISMATCH at q^" << *bad << ": computed " << computed.coeff(*bad).get_str()
                      << ", published " << published.coeff(*bad).get_str() << '\n';
        } else {
            std::cout << "n=" << n << " match " << to_string(computed) << '\n';
        }
        if (bad) {
            status = exit_mismatch;
            break;
        }
    }
    if (fmt == "json") std::cout << rows.dump() << '\n';
    return status;
}

std::vector<int> parse_primes(const std::string& text) {
    std::vector<int> primes;
    for (int p : detail::parse_int_list(text)) {
        if (!oracle::is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
        primes.push_back(p);
    }
    if (primes.empty()) throw InputError("--primes is empty");
    return primes;
}

int cmd_verify(const Config& cfg) {
    if (cfg.n < 1) throw InputError("--n must be at least 1");
    const Composition mu = levi_for(cfg);
    check_levi(cfg.n, mu);
    const std::vector<int> primes = parse_primes(cfg.primes);
    GreenTables tables = make_tables(cfg);
    const IntPoly k = k_unipotent(cfg.n, mu, tables).polynomial;
    const bool as_json = output_format(cfg) == "json";
    json rows = json::array();
    int status = exit_ok;
    for (int p : primes) {
        const auto scene = oracle::OracleScene::build(mu, p, cfg.budget);
        const std::uint64_t brute = oracle::burnside_count(scene);
        const std::uint64_t pairs = oracle::commuting_variety_count(scene);
        const mpz_class symbolic = eval_int(k, p);
        const bool match = symbolic == brute && pairs == scene.radical.size() * brute;
        if (!match) status = exit_mismatch;
        if (as_json)
            rows.push_back({{"p", p}, {"symbolic", symbolic.get_str()}, {"oracle", std::to_string(brute)},
                            {"commuting_pairs", std::to_string(pairs)}, {"radical_order", scene.radical.size()},
                            {"match", match}});
        else
            std::cout << "p=" << p << " symbolic=" << symbolic.get_str() << " oracle=" << brute
                      << " commuting=" << pairs << " |U|=" << scene.radical.size() << ' '
                      << (match ? "match" : "MISMATCH") << '\n';
    }
    if (as_json) std::cout << json{{"n", cfg.n}, {"levi", mu.parts()}, {"results", rows}}.dump() << '\n';
    return status;
}

int cmd_green(const Config& cfg) {
    const Partition lambda = Partition::parse(cfg.lambda);
    const Partition rho = Partition::parse(cfg.rho);
    if (lambda.size() != rho.size()) throw InputError("|lambda| != |rho|");
    if (lambda.size() < 1) throw InputError("partitions must be nonempty");
    GreenTables tables = make_tables(cfg);
    const IntPoly q = tables.get(lambda.size()).at(lambda, rho);
    if (output_format(cfg) == "json")
        std::cout << json{{"lambda", lambda.parts()}, {"rho", rho.parts()}, {"coeffs_low_to_high", to_json(q)}}.dump()
                  << '\n';
    else
        std::cout << to_string(q) << '\n';
    return exit_ok;
}

int cmd_selftest(const Config& cfg) {
    selftest::Options opt;
    opt.budget = cfg.budget;
    const auto results = selftest::run(opt);
    bool failed = false;
    json out = json::array();
    for (const auto& r : results) {
        failed |= r.status == selftest::Status::fail;
        if (output_format(cfg) == "json")
            out.push_back({{"suite", r.name}, {"status", selftest::to_string(r.status)}, {"detail", r.detail}});
        else
            std::cout << r.name << ": " << selftest::to_string(r.status) << " (" << r.detail << ")\n";
    }
    if (output_format(cfg) == "json") std::cout << out.dump() << '\n';
    return failed ? exit_mismatch : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact U-conjugacy class counts on the unipotent set of GL_n(q)"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cfg.cache_dir, std::string("table cache directory (default: $") + cache_env_var +
                                                          ", then the user cache directory)");
        sub->add_flag("--no-cache", cfg.no_cache, "do not read or write the table cache");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_flag("--json", cfg.json_flag, "same as --format json");
    };

    auto* compute = app.add_subcommand("compute", "k(U, G_uni) as a polynomial in q");
    compute->add_option("--n", cfg.n, "rank n of GL_n")->required();
    compute->add_option("--levi", cfg.levi, "Levi block sizes, e.g. 2,1 (default: Borel)");
    compute->add_flag("--all-levis", cfg.all_levis, "every composition of n");
    add_common(compute);

    auto* table = app.add_subcommand("table", "reproduce the published Borel table for n = 2..max");
    table->add_option("--max-n", cfg.max_n, "largest n (at most 10)");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "compare against brute-force enumeration over F_p");
    verify->add_option("--n", cfg.n, "rank n of GL_n")->required();
    verify->add_option("--levi", cfg.levi, "Levi block sizes (default: Borel)");
    verify->add_option("--primes", cfg.primes, "comma-separated primes");
    verify->add_option("--budget", cfg.budget, "largest enumeration allowed");
    add_common(verify);

    auto* green = app.add_subcommand("green", "Green polynomial Q^lambda_rho(q)");
    green->add_option("--lambda", cfg.lambda, "unipotent class (Jordan type)")->required();
    green->add_option("--rho", cfg.rho, "torus class (cycle type)")->required();
    add_common(green);

    auto* self = app.add_subcommand("selftest", "run every invariant suite");
    self->add_option("--budget", cfg.budget, "largest enumeration allowed for oracle suites");
    add_common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*compute) return cmd_compute(cfg);
        if (*table) return cmd_table(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*green) return cmd_green(cfg);
        if (*self) return cmd_selftest(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_input;
    } catch (const InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_input;
}
