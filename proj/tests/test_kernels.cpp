#include <omp.h>

#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "rankmc/kernels.hpp"
#include "rankmc/sampling.hpp"

using namespace rankmc;

namespace {

struct Case {
    std::uint32_t p, h, m;
    std::size_t k, n;
};

const std::vector<Case> kCases = {{2, 1, 2, 2, 2}, {2, 1, 2, 2, 3}, {2, 1, 3, 2, 3}, {2, 1, 3, 2, 4}, {2, 1, 3, 3, 3},
                                  {2, 1, 3, 3, 5}, {3, 1, 2, 2, 2}, {3, 1, 2, 3, 4}, {2, 2, 2, 2, 3}, {2, 1, 4, 2, 5}};

}  // namespace

TEST_CASE("parallel kernels match the serial references") {
    omp_set_num_threads(4);
    Rng rng(11);
    for (const auto& c : kCases) {
        auto f = FieldTower::make(c.p, c.h, c.m);
        for (int trial = 0; trial < 4; ++trial) {
            const System u = random_system(f, c.k, c.n, rng);
            const ExtMatrix& g = u.matrix();
            CHECK(kernels::weight_counts(*f, g) == kernels::weight_counts_serial(*f, g));
            CHECK(kernels::point_weights(*f, g) == kernels::point_weights_serial(*f, g));
            const auto a = kernels::hyperplane_census(*f, g), b = kernels::hyperplane_census_serial(*f, g);
            CHECK(a.t0 == b.t0);
            CHECK(a.t1 == b.t1);
            CHECK(a.ts == b.ts);
        }
    }
}

TEST_CASE("kernels match enumeration oracles") {
    omp_set_num_threads(3);
    Rng rng(12);
    for (const auto& c : kCases) {
        if (oracle::ipow(oracle::ipow(c.p, c.h * c.m), c.k) > 4096) continue;
        auto f = FieldTower::make(c.p, c.h, c.m);
        oracle::Field o(c.p, c.h, c.m);
        const System u = random_system(f, c.k, c.n, rng);
        const auto G = testing::rows_of(u.matrix());

        const auto dist = oracle::weight_distribution(o, G);
        CHECK(kernels::weight_counts(*f, u.matrix()) == dist);

        const auto members = oracle::system_members(o, testing::basis_of(u));
        std::vector<std::uint64_t> pw(c.n + 1, 0);
        std::uint64_t t0 = 0, t1 = 0, ts = 0;
        const auto pts = oracle::points(o, c.k);
        std::vector<std::size_t> weights;
        for (const auto& pt : pts) {
            const auto w = oracle::point_weight(o, members, pt);
            ++pw[w];
            weights.push_back(w);
        }
        CHECK(kernels::point_weights(*f, u.matrix()) == pw);
        // a hyperplane's class counts the points of L_U on it
        for (const auto& x : pts) {
            std::size_t on = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (!weights[i]) continue;
                std::uint32_t s = 0;
                for (std::size_t j = 0; j < c.k; ++j) s = o.add(s, o.mul(x[j], pts[i][j]));
                on += s == 0;
            }
            (on == 0 ? t0 : on == 1 ? t1 : ts)++;
        }
        const auto census = kernels::hyperplane_census(*f, u.matrix());
        CHECK(census.t0 == t0);
        CHECK(census.t1 == t1);
        CHECK(census.ts == ts);
    }
}

TEST_CASE("intersection dimension through functionals") {
    Rng rng(13);
    auto f = FieldTower::make(2, 1, 3);
    oracle::Field o(2, 1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const System u = random_system(f, 3, 4, rng);
        const auto members = oracle::system_members(o, testing::basis_of(u));
        for (const auto& pt : enumerate_points(*f, 3)) {
            const std::size_t hw = kernels::intersection_dim(*f, u.matrix(), {pt.v});
            CHECK(hw == oracle::hyperplane_weight(o, members, testing::raw(pt.v)));
            const auto basis = kernels::intersection_basis(*f, u.matrix(), {pt.v});
            CHECK(basis.size() == hw);
            for (const auto& b : basis) CHECK(dot(*f, pt.v, b) == f->zero());
            // encoded weight is n minus the hyperplane weight
            CHECK(rank_of_elements(*f, kernels::encode(*f, u.matrix(), pt.v)) == u.n() - hw);
        }
    }
}

TEST_CASE("budget guards") {
    auto f = FieldTower::make(2, 1, 4);
    ExtMatrix g(5, 5);
    for (std::size_t i = 0; i < 5; ++i) g(i, i) = f->one();
    CHECK_THROWS_AS(kernels::weight_counts(*f, g, 1000), BudgetExceeded);
    CHECK_THROWS_AS(kernels::weight_counts_serial(*f, g, 1000), BudgetExceeded);
    CHECK_THROWS_AS(kernels::point_weights(*f, g, 1000), BudgetExceeded);
    CHECK_THROWS_AS(kernels::hyperplane_census(*f, g, 1000), BudgetExceeded);
}
