#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "rankmc/constructions.hpp"
#include "rankmc/sampling.hpp"

using namespace rankmc;

namespace {

ExtMatrix mat(std::vector<std::vector<Elem>> rows) {
    ExtMatrix g(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) g(i, j) = rows[i][j];
    return g;
}

void check_distribution_invariants(const Code& c) {
    const auto& A = weight_distribution(c);
    const auto& f = c.field();
    const BigInt unit = big_pow(f.q(), f.m()) - 1;
    BigInt total = 0;
    for (const auto& a : A) total += a;
    CHECK(total == big_pow(f.q(), f.m() * c.k()));
    CHECK(A[0] == 1);
    const std::size_t d = min_distance(c);
    for (std::size_t i = 1; i < A.size(); ++i) {
        CHECK(A[i] % unit == 0);
        if (i < d) CHECK(A[i] == 0);
    }
    // Singleton
    const std::size_t m = f.m(), n = c.n();
    CHECK(m * c.k() <= std::max(m, n) * (std::min(m, n) - d + 1));
}

}  // namespace

TEST_CASE("construction and validation of codes") {
    auto f4 = FieldTower::make(2, 1, 2);
    const Elem w = f4->z();
    const Code full = make_code(f4, mat({{f4->one(), f4->zero()}, {f4->zero(), f4->one()}}));
    CHECK(full.n() == 2);
    CHECK(full.k() == 2);
    CHECK(is_nondegenerate(full));
    CHECK_FALSE(is_nondegenerate(make_code(f4, mat({{f4->one(), f4->one()}}))));
    CHECK_FALSE(is_nondegenerate(make_code(f4, mat({{f4->one(), w, f4->one()}, {w, f4->one(), w}}))));
    CHECK_THROWS_AS(make_code(f4, mat({{f4->one(), w}, {f4->one(), w}})), std::invalid_argument);
    CHECK_THROWS(make_code(f4, mat({{Elem{9}, w}})));

    auto f8 = FieldTower::make(2, 1, 3);
    const Elem z = f8->z();
    const Code moore = make_code(f8, mat({{f8->one(), z, f8->mul(z, z)}, {f8->one(), f8->mul(z, z), f8->pow(z, 4)}}));
    CHECK(moore.k() == 2);
    CHECK(moore.n() == 3);
}

TEST_CASE("rank weight examples") {
    auto f4 = FieldTower::make(2, 1, 2);
    CHECK(weight(*f4, Vec{f4->zero(), f4->zero()}) == 0);
    CHECK(weight(*f4, Vec{f4->one(), f4->z()}) == 2);
    CHECK(weight(*f4, Vec{f4->one(), f4->one(), f4->zero()}) == 1);
}

TEST_CASE("small distributions") {
    auto f4 = FieldTower::make(2, 1, 2);
    const Code full = make_code(f4, mat({{f4->one(), f4->zero()}, {f4->zero(), f4->one()}}));
    CHECK(weight_distribution(full) == WeightDistribution{1, 9, 6});
    CHECK(max_weight_count(full) == 6);
    CHECK(min_distance(full) == 1);
    CHECK(is_mrd(full));

    auto f8 = FieldTower::make(2, 1, 3);
    const Code g = gabidulin(f8, 3, 2);
    CHECK(weight_distribution(g) == WeightDistribution{1, 0, 49, 14});
    CHECK(max_weight_count(g) == 14);
    CHECK(min_distance(g) == 2);
    CHECK(is_mrd(g));
    CHECK(generalized_weight(g, 1) == 2);
    CHECK(generalized_weight(g, 2) == 3);

    const Code p = poly_code(f8, {1, 2});
    CHECK(weight_distribution(p) == WeightDistribution{1, 7, 28, 28});
    CHECK(min_distance(p) == 1);
    CHECK_FALSE(is_mrd(p));
    CHECK(second_max_weight(p) == std::optional<std::size_t>(2));
}

TEST_CASE("distributions agree with brute-force encoding") {
    Rng rng(21);
    const std::vector<std::array<std::uint32_t, 5>> cases = {
        {2, 1, 2, 2, 3}, {2, 1, 3, 2, 3}, {2, 1, 3, 2, 5}, {3, 1, 2, 2, 3}, {2, 2, 2, 2, 3}, {2, 1, 3, 3, 4}, {2, 1, 4, 2, 4}};
    for (auto [p, h, m, k, n] : cases) {
        auto f = FieldTower::make(p, h, m);
        oracle::Field o(p, h, m);
        for (int trial = 0; trial < 3; ++trial) {
            const Code c = code_of(random_system(f, k, n, rng));
            CHECK(weight_distribution(c) == testing::to_big(oracle::weight_distribution(o, testing::rows_of(c.generator()))));
            check_distribution_invariants(c);
        }
    }
}

TEST_CASE("MRD distribution formula") {
    CHECK(mrd_weight_distribution(2, 3, 3, 2, 2) == WeightDistribution{1, 0, 49, 14});
    CHECK(mrd_weight_distribution(2, 3, 3, 1, 3) == WeightDistribution{1, 0, 0, 7});
    CHECK_THROWS(mrd_weight_distribution(2, 3, 3, 2, 1));
    for (std::uint64_t q : {2u, 3u}) {
        for (std::uint64_t m = 1; m <= 4; ++m) {
            for (std::uint64_t n = 1; n <= m; ++n) {
                for (std::uint64_t k = 1; k <= n; ++k) {
                    const std::uint64_t d = n - k + 1;
                    const auto A = mrd_weight_distribution(q, m, n, k, d);
                    BigInt total = 0;
                    for (const auto& a : A) total += a;
                    CHECK(total == big_pow(q, m * k));
                    const auto ref = oracle::mrd_distribution(q, m, n, d);
                    for (std::size_t w = 0; w <= n; ++w) CHECK(A[w] == BigInt(ref[w]));
                }
            }
        }
    }
}

TEST_CASE("Gabidulin codes are MRD with the predicted distribution") {
    for (auto [p, h, m, n, k] : std::vector<std::array<std::uint32_t, 5>>{
             {2, 1, 3, 3, 2}, {2, 1, 3, 3, 1}, {2, 1, 4, 4, 2}, {2, 1, 4, 3, 2}, {3, 1, 3, 3, 2}, {2, 2, 2, 2, 1}}) {
        auto f = FieldTower::make(p, h, m);
        const Code c = gabidulin(f, n, k);
        CHECK(is_mrd(c));
        CHECK(min_distance(c) == n - k + 1);
        CHECK(weight_distribution(c) == mrd_weight_distribution(f->q(), m, n, k, n - k + 1));
        check_distribution_invariants(c);
    }
    const Code full = gabidulin(FieldTower::make(2, 1, 3), 3, 3);
    CHECK(min_distance(full) == 1);
    CHECK(is_mrd(full));
    CHECK(max_weight_count(full) == 7 * 6 * 4);
    CHECK_THROWS(gabidulin(FieldTower::make(2, 1, 3), 4, 2));
}

TEST_CASE("isometries preserve the distribution") {
    Rng rng(22);
    const std::vector<std::array<std::uint32_t, 5>> cases = {{2, 1, 3, 2, 3}, {2, 1, 3, 3, 5}, {3, 1, 2, 2, 3}, {2, 1, 2, 2, 4}};
    for (auto [p, h, m, k, n] : cases) {
        auto f = FieldTower::make(p, h, m);
        const Code c = code_of(random_system(f, k, n, rng));
        for (int i = 0; i < 20; ++i) {
            const Code d = right_multiply(c, random_gl(*f, n, rng));
            CHECK(max_weight_count(d) == max_weight_count(c));
            CHECK(weight_distribution(d) == weight_distribution(c));
        }
    }
}

TEST_CASE("generalized weights") {
    Rng rng(23);
    auto f = FieldTower::make(2, 1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t k = 2 + trial % 2, n = k + 1 + trial % 3;
        const Code c = code_of(random_system(f, k, n, rng));
        CHECK(generalized_weight(c, 1) == min_distance(c));
        CHECK(generalized_weight(c, k) == n);
        for (std::size_t r = 1; r < k; ++r) CHECK(generalized_weight(c, r) < generalized_weight(c, r + 1));
    }
}

TEST_CASE("simplex codes") {
    const Code s = simplex_code(FieldTower::make(2, 1, 2), 2);
    CHECK(s.n() == 4);
    CHECK(weight_distribution(s) == WeightDistribution{1, 0, 15});
    CHECK(max_weight_count(s) == 15);
    CHECK(is_nondegenerate(s));
    const Code s1 = simplex_code(FieldTower::make(2, 1, 3), 1);
    CHECK(weight_distribution(s1) == WeightDistribution{1, 0, 0, 7});
}

TEST_CASE("distribution budget") {
    CHECK_THROWS_AS(weight_distribution(simplex_code(FieldTower::make(2, 1, 4), 6), 1000), BudgetExceeded);
}
