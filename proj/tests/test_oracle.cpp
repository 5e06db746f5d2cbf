#include "catch_amalgamated.hpp"

#include "kug/oracle.hpp"

using namespace kug;
using namespace kug::oracle;

TEST_CASE("primes and budgets") {
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(enumerate_unipotent(3, 5, 10), BudgetError);
    CHECK_THROWS_AS(enumerate_unipotent(2, 4), InputError);
    CHECK(checked_pow(2, 70) == UINT64_MAX);
    CHECK_THROWS_AS(require_budget(checked_pow(2, 70), default_budget, "x"), BudgetError);
}

TEST_CASE("enumerate_unipotent") {
    for (int p : {2, 3, 5}) {
        const auto one = enumerate_unipotent(1, p);
        REQUIRE(one.size() == 1);
        CHECK(one.front().key() == MatrixFp::identity(1, p).key());
    }
    CHECK(enumerate_unipotent(2, 2).size() == 4);
    CHECK(enumerate_unipotent(2, 3).size() == 9);
    CHECK(enumerate_unipotent(3, 2).size() == 64);
}

TEST_CASE("matrix helpers") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const MatrixFp g = random_invertible(3, 5, rng);
        CHECK(g * inverse(g) == MatrixFp::identity(3, 5));
        CHECK(MatrixFp::decode(3, 5, g.key()) == g);
    }
    CHECK(inverse_mod(3, 7) == 5);
}

TEST_CASE("jordan_type") {
    CHECK(jordan_type(MatrixFp::identity(3, 2)) == Partition{1, 1, 1});
    for (int n = 1; n <= 4; ++n) CHECK(jordan_type(jordan_representative(Partition::row(n), 3)) == Partition::row(n));
    const MatrixFp x = jordan_representative({2, 1}, 2);
    CHECK(rank(x - MatrixFp::identity(3, 2)) == 1);
    CHECK(((x - MatrixFp::identity(3, 2)) * (x - MatrixFp::identity(3, 2))).is_zero());
    CHECK(jordan_type(x) == Partition{2, 1});
    // Invariant under conjugation.
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int i = 0; i < 5; ++i) {
                const MatrixFp g = random_invertible(n, 3, rng);
                CHECK(jordan_type(g * jordan_representative(lambda, 3) * inverse(g)) == lambda);
            }
}

TEST_CASE("burnside_count and commuting pairs") {
    CHECK(burnside_count(OracleScene::build({1, 1}, 2)) == 3);
    CHECK(burnside_count(OracleScene::build({1, 1}, 3)) == 5);
    for (int p : {2, 3, 5}) CHECK(burnside_count(OracleScene::build({2}, p)) == static_cast<std::uint64_t>(p * p));
    CHECK(commuting_variety_count(OracleScene::build({1, 1}, 2)) == 6);
    CHECK(commuting_variety_count(OracleScene::build({1, 1}, 3)) == 15);
    CHECK(commuting_variety_count(OracleScene::build({1}, 7)) == 1);
}

TEST_CASE("orbit count does not depend on the conjugate of U") {
    std::mt19937_64 rng(3);
    const auto base = OracleScene::build({2, 1}, 3);
    const auto expected = burnside_count(base);
    for (int i = 0; i < 3; ++i) CHECK(burnside_count(base.conjugated(random_invertible(3, 3, rng))) == expected);
}

TEST_CASE("radical_elements") {
    CHECK(radical_elements({1, 1}, 3).size() == 3);
    CHECK(radical_elements({2, 1}, 2).size() == 4);
    CHECK(radical_elements({1, 1, 1}, 2).size() == 8);
    CHECK(radical_elements({3}, 5).size() == 1);
    for (const MatrixFp& v : radical_elements({1, 2}, 3)) CHECK(is_unipotent(v));
}

TEST_CASE("flag_fixed_points") {
    for (int p : {2, 3, 5}) {
        CHECK(flag_fixed_points({1, 1}, p) == static_cast<std::uint64_t>(p + 1));
        CHECK(flag_fixed_points({2}, p) == 1);
    }
    CHECK(flag_fixed_points({1, 1, 1}, 2) == 21);
    CHECK_THROWS_AS(flag_fixed_points({1, 1}, 4), InputError);
}

TEST_CASE("centralizer_count") {
    const auto id = centralizer_count(MatrixFp::identity(2, 2));
    CHECK(id.group_order == 6);
    CHECK(id.unipotent_order == 4);
    const auto reg = centralizer_count(jordan_representative({2}, 3));
    CHECK(reg.group_order == 6);
    CHECK(reg.unipotent_order == 3);
    const auto mixed = centralizer_count(jordan_representative({2, 1}, 2));
    CHECK(mixed.group_order == 8);
    CHECK(mixed.unipotent_order == 8);
}

TEST_CASE("class_meets_U") {
    for (int n = 1; n <= 3; ++n)
        for (const Composition& mu : compositions_of(n)) CHECK(class_meets_U(Partition::column(n), mu, 3));
    for (int n = 2; n <= 4; ++n) CHECK_FALSE(class_meets_U(Partition::row(n), {n}, 2));
    CHECK_FALSE(class_meets_U({3}, {2, 1}, 2));
    CHECK(class_meets_U({2, 1}, {2, 1}, 2));
}
