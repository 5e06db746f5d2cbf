#include "catch_amalgamated.hpp"

#include "kug/combinatorics.hpp"

using namespace kug;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_numbers(int up_to) {
    std::vector<long> p(static_cast<std::size_t>(up_to + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= up_to; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long sign = (k % 2) ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    return p;
}

// Brute force over S_n: returns (cycle type, sign) of every permutation.
std::vector<std::pair<Partition, int>> all_permutation_types(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Partition, int>> out;
    do {
        std::vector<bool> seen(perm.size(), false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        const int sign = ((n - static_cast<int>(cycles.size())) % 2) ? -1 : 1;
        out.emplace_back(Partition::from_unsorted(cycles), sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    const auto pn = partition_numbers(12);
    CHECK(pn[10] == 42);
    for (int n = 0; n <= 12; ++n) {
        const auto parts = partitions_of(n);
        CHECK(static_cast<long>(parts.size()) == pn[static_cast<std::size_t>(n)]);
        CHECK(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
        CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({2, 0}), InputError);
    CHECK_THROWS_AS(partitions_of(65), InputError);
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("(2, 2)") == Partition{2, 2});
    CHECK_THROWS_AS(Partition::parse("2,,1"), InputError);
    CHECK_THROWS_AS(Composition::parse("1,x"), InputError);
}

TEST_CASE("conjugate") {
    CHECK(conjugate({3}) == Partition{1, 1, 1});
    CHECK(conjugate({2, 1}) == Partition{2, 1});
    CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
    for (int n = 0; n <= 12; ++n)
        for (const Partition& l : partitions_of(n)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("n_stat agrees with the column form") {
    CHECK(n_stat({5}) == 0);
    CHECK(n_stat({1, 1}) == 1);
    CHECK(n_stat({2, 2}) == 2);
    for (int n = 1; n <= 10; ++n)
        for (const Partition& l : partitions_of(n)) {
            const Partition dual = conjugate(l);
            long alt = 0;
            for (int c : dual.parts()) alt += static_cast<long>(c) * (c - 1) / 2;
            CHECK(n_stat(l) == alt);
        }
}

TEST_CASE("multiplicities and z_stat") {
    CHECK(multiplicities({2, 1}) == std::map<int, int>{{2, 1}, {1, 1}});
    CHECK(multiplicities({1, 1, 1}) == std::map<int, int>{{1, 3}});
    CHECK(multiplicities({3, 3, 1}) == std::map<int, int>{{3, 2}, {1, 1}});
    CHECK(z_stat({1, 1, 1}) == 6);
    CHECK(z_stat({3}) == 3);
    CHECK(z_stat({2, 1}) == 2);
    for (int n = 1; n <= 10; ++n) {
        mpz_class total = 0;
        for (const Partition& r : partitions_of(n)) total += factorial(n) / z_stat(r);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("z_stat matches brute-force class sizes") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, long> sizes;
        for (const auto& [rho, sign] : all_permutation_types(n)) ++sizes[rho];
        for (const auto& [rho, size] : sizes) CHECK(factorial(n) / z_stat(rho) == size);
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq({1, 1, 1}, {3}));
    CHECK_FALSE(dominance_leq({3}, {1, 1, 1}));
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
    CHECK_THROWS_AS(dominance_leq({2}, {1}), InputError);
}

TEST_CASE("levi_signed_cycle_types examples") {
    using T = SignedCycleTypeTerm;
    CHECK(levi_signed_cycle_types({1, 1}) == std::vector<T>{{{1, 1}, 1, 1}});
    CHECK(levi_signed_cycle_types({2}) == std::vector<T>{{{2}, 1, -1}, {{1, 1}, 1, 1}});
    CHECK(levi_signed_cycle_types({2, 1}) == std::vector<T>{{{2, 1}, 1, -1}, {{1, 1, 1}, 1, 1}});
}

TEST_CASE("levi_signed_cycle_types agrees with brute force over W_L") {
    // A class function on S_n: an arbitrary injective weight of the cycle type.
    auto g = [](const Partition& rho) {
        long h = 17;
        for (int part : rho.parts()) h = h * 31 + part;
        return h;
    };
    for (int n = 1; n <= 6; ++n)
        for (const Composition& mu : compositions_of(n)) {
            long expected = 0;
            // W_L elements: one permutation per block, block types concatenated.
            std::vector<std::vector<std::pair<Partition, int>>> blocks;
            for (int b : mu.parts()) blocks.push_back(all_permutation_types(b));
            std::vector<int> concat;
            auto rec = [&](auto&& self, std::size_t a, int sign) -> void {
                if (a == blocks.size()) {
                    expected += sign * g(Partition::from_unsorted(concat));
                    return;
                }
                for (const auto& [rho, s] : blocks[a]) {
                    const auto before = concat.size();
                    concat.insert(concat.end(), rho.parts().begin(), rho.parts().end());
                    self(self, a + 1, sign * s);
                    concat.resize(before);
                }
            };
            rec(rec, 0, 1);
            mpz_class got = 0;
            for (const auto& t : levi_signed_cycle_types(mu)) got += t.sign * t.weight * g(t.rho);
            CHECK(got == expected);
        }
}

TEST_CASE("levi weights and sign sums") {
    for (int n = 1; n <= 8; ++n)
        for (const Composition& mu : compositions_of(n)) {
            mpz_class weights = 0, signed_sum = 0, order = 1;
            for (int b : mu.parts()) order *= factorial(b);
            for (const auto& t : levi_signed_cycle_types(mu)) {
                weights += t.weight;
                signed_sum += t.sign * t.weight;
                CHECK(t.rho.size() == n);
            }
            CHECK(weights == order);
            CHECK(signed_sum == (mu.is_borel() ? 1 : 0));
        }
}

TEST_CASE("compositions keep their order") {
    const auto comps = compositions_of(4);
    CHECK(comps.size() == 8);
    CHECK(Composition{2, 1} != Composition{1, 2});
    CHECK(Composition{2, 1}.block_type() == Composition{1, 2}.block_type());
    CHECK(Composition::borel(3).is_borel());
}
