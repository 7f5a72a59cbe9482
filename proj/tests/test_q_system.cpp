#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "rankmc/constructions.hpp"
#include "rankmc/sampling.hpp"

using namespace rankmc;

namespace {

struct Shape {
    std::uint32_t m;
    std::size_t k;
};

const std::vector<Shape> kDualityShapes = {{2, 2}, {3, 2}, {2, 3}, {3, 3}};

}  // namespace

TEST_CASE("systems of small codes") {
    auto f4 = FieldTower::make(2, 1, 2);
    const System sub = subgeometry_system(f4, 2);
    CHECK(is_canonical_subgeometry(sub));
    CHECK(is_scattered(sub));
    CHECK(point_weight(sub, Vec{f4->one(), f4->zero()}) == 1);
    CHECK(point_weight(sub, Vec{f4->one(), f4->z()}) == 0);
    const auto c = hyperplane_census(sub);
    CHECK(c.t0 == 2);
    CHECK(c.t1 == 3);
    CHECK(c.ts == 0);
    // the standard form makes F_2^2 self-dual inside F_4^2
    CHECK(same_subspace(dual_system(sub), sub));

    auto f8 = FieldTower::make(2, 1, 3);
    const System gab = system_of(gabidulin(f8, 3, 2));
    const auto sg = point_spectrum(gab);
    CHECK(sg.N[1] == 7);
    CHECK(sg.size == 7);
    CHECK(is_scattered(gab));
    const System gd = dual_system(gab);
    CHECK(gd.n() == 3);
    CHECK(is_scattered(gd));
    // the Moore system is the graph {(x, x^2)}
    std::vector<Vec> graph;
    for (Elem x : f8->default_basis()) graph.push_back({x, f8->mul(x, x)});
    CHECK(same_subspace(gab, make_system(f8, 2, graph)));

    const System pu = system_of(poly_code(f8, {1, 2}));
    CHECK(point_weight(pu, Vec{f8->zero(), f8->one()}) == 2);
    const auto sp = point_spectrum(pu);
    CHECK(sp.N[1] == 4);
    CHECK(sp.N[2] == 1);
    CHECK(sp.size == 5);
    CHECK_FALSE(is_scattered(pu));
    const System span3 = make_system(f8, 2, {{f8->one(), f8->zero()}, {f8->zero(), f8->one()}, {f8->zero(), f8->z()}});
    CHECK(same_subspace(pu, span3));

    const System plane = subgeometry_system(f8, 3);
    CHECK(point_spectrum(plane).N[1] == 7);
    const auto pc = hyperplane_census(plane);
    CHECK(pc.t0 == 24);
    CHECK(pc.t1 == 42);
    CHECK(pc.ts == 7);
}

TEST_CASE("weights agree with counting oracles") {
    Rng rng(31);
    for (auto [p, h, m, k, n] : std::vector<std::array<std::uint32_t, 5>>{
             {2, 1, 2, 2, 2}, {2, 1, 3, 2, 4}, {2, 1, 3, 3, 4}, {3, 1, 2, 2, 3}, {2, 2, 2, 2, 3}}) {
        auto f = FieldTower::make(p, h, m);
        oracle::Field o(p, h, m);
        const System u = random_system(f, k, n, rng);
        const auto members = oracle::system_members(o, testing::basis_of(u));
        for (const auto& pt : enumerate_points(*f, k)) {
            CHECK(point_weight(u, pt.v) == oracle::point_weight(o, members, testing::raw(pt.v)));
            CHECK(hyperplane_weight(u, pt.v) == oracle::hyperplane_weight(o, members, testing::raw(pt.v)));
        }
        // codeword weight is n minus the hyperplane weight
        const Code c = code_of(u);
        for (const auto& pt : enumerate_points(*f, k)) {
            CHECK(weight(*f, c.encode(pt.v)) == n - hyperplane_weight(u, pt.v));
        }
    }
}

TEST_CASE("dual system is the trace-orthogonal complement") {
    Rng rng(32);
    for (const auto& s : kDualityShapes) {
        auto f = FieldTower::make(2, 1, s.m);
        oracle::Field o(2, 1, s.m);
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t n = s.k + rng() % (s.k * s.m - s.k);
            const System u = random_system(f, s.k, n, rng);
            const System w = dual_system(u);
            CHECK(w.n() == s.k * s.m - n);
            for (const auto& a : u.basis()) {
                for (const auto& b : w.basis()) {
                    std::uint32_t acc = 0;
                    for (std::size_t i = 0; i < s.k; ++i) acc = o.add(acc, o.mul(a[i].v, b[i].v));
                    CHECK(o.trace(acc) == 0);
                }
            }
        }
    }
}

TEST_CASE("duality relation between point and hyperplane weights") {
    Rng rng(33);
    std::size_t systems = 0;
    for (int round = 0; round < 30; ++round) {
        for (const auto& s : kDualityShapes) {
            auto f = FieldTower::make(2, 1, s.m);
            const std::size_t N = s.k * s.m;
            const std::size_t n = s.k + rng() % (N - s.k + 1);
            const System u = random_system(f, s.k, n, rng);
            const System w = dual_system(u);
            const long shift = static_cast<long>(N) - static_cast<long>(n);
            for (const auto& pt : enumerate_points(*f, s.k)) {
                CHECK(static_cast<long>(hyperplane_weight(w, pt.v)) ==
                      static_cast<long>(point_weight(u, pt.v)) + shift - static_cast<long>(s.m));
                CHECK(static_cast<long>(point_weight(w, pt.v)) ==
                      static_cast<long>(hyperplane_weight(u, pt.v)) + shift - static_cast<long>((s.k - 1) * s.m));
            }
            CHECK(same_subspace(dual_system(w), u));
            ++systems;
        }
    }
    CHECK(systems >= 100);
}

TEST_CASE("half-rank systems are scattered exactly when their duals are") {
    Rng rng(34);
    int checked = 0;
    for (int round = 0; round < 10; ++round) {
        for (auto [m, k] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}}) {
            auto f = FieldTower::make(2, 1, m);
            const System u = random_system(f, k, k * m / 2, rng);
            CHECK(is_scattered(u) == is_scattered(dual_system(u)));
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("spectrum identities") {
    Rng rng(35);
    const auto before = spectrum_checks_performed();
    for (auto [p, m, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {3, 2, 2}, {2, 4, 2}}) {
        auto f = FieldTower::make(p, 1, m);
        for (std::size_t n = k; n <= k * m; ++n) {
            const System u = random_system(f, k, n, rng);
            const auto s = point_spectrum(u);
            const std::uint64_t q = p;
            // independent points carry total weight at most n
            std::vector<ProjPoint> heavy;
            for (const auto& pt : enumerate_points(*f, k))
                if (point_weight(u, pt.v)) heavy.push_back(pt);
            for (std::size_t a = 0; a < heavy.size(); ++a) {
                for (std::size_t b = a + 1; b < heavy.size() && b < a + 6; ++b) {
                    CHECK(point_weight(u, heavy[a].v) + point_weight(u, heavy[b].v) <= n);
                }
            }
            CHECK(s.size % q == 1 % q);
            // with e the least point weight, q^{n-e} < |L_U| <= (q^n - 1)/(q^e - 1)
            std::size_t e = n;
            for (std::size_t i = 1; i < s.N.size(); ++i)
                if (s.N[i]) {
                    e = i;
                    break;
                }
            CHECK(oracle::ipow(q, n - e) < s.size);
            CHECK(s.size * (oracle::ipow(q, e) - 1) <= oracle::ipow(q, n) - 1);
            if (k == 2 && n > 1 && n <= m && s.N[1]) CHECK(s.size >= oracle::ipow(q, n - 1) + 1);
        }
    }
    CHECK(spectrum_checks_performed() > before);
}

TEST_CASE("independent triples carry total weight at most n") {
    Rng rng(36);
    auto f = FieldTower::make(2, 1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const System u = random_system(f, 3, n, rng);
        std::vector<ProjPoint> heavy;
        for (const auto& pt : enumerate_points(*f, 3))
            if (point_weight(u, pt.v)) heavy.push_back(pt);
        for (std::size_t a = 0; a < heavy.size() && a < 12; ++a) {
            for (std::size_t b = a + 1; b < heavy.size() && b < 12; ++b) {
                for (std::size_t c = b + 1; c < heavy.size() && c < 12; ++c) {
                    ExtMatrix m(3, 3);
                    for (std::size_t j = 0; j < 3; ++j) {
                        m(0, j) = heavy[a].v[j];
                        m(1, j) = heavy[b].v[j];
                        m(2, j) = heavy[c].v[j];
                    }
                    if (rank_ext(*f, m) < 3) continue;
                    CHECK(point_weight(u, heavy[a].v) + point_weight(u, heavy[b].v) + point_weight(u, heavy[c].v) <= n);
                }
            }
        }
    }
}

TEST_CASE("geometric duals") {
    auto f8 = FieldTower::make(2, 1, 3);
    const Code p12 = poly_code(f8, {1, 2});
    const Code d = geometric_dual(p12);
    CHECK(d.n() == 3);
    CHECK(d.k() == 2);
    CHECK(weight_distribution(d) == weight_distribution(poly_code(f8, {2, 1})));
    CHECK(weight_distribution(geometric_dual(d)) == weight_distribution(p12));
    CHECK_THROWS(geometric_dual(simplex_code(f8, 2)));
    CHECK_THROWS(code_of(make_system(f8, 2, {{f8->one(), f8->zero()}})));
}

TEST_CASE("tangent hyperplanes to the subgeometry plane") {
    auto f8 = FieldTower::make(2, 1, 3);
    const System plane = subgeometry_system(f8, 3);
    for (const auto& pt : enumerate_points(*f8, 3)) {
        const auto x = find_tangent_hyperplane(plane, pt.v);
        REQUIRE(x.has_value());
        CHECK(dot(*f8, *x, pt.v) == f8->zero());
        // exactly one point of the subplane on the line
        std::size_t on = 0;
        for (const auto& s : enumerate_points(*f8, 3))
            if (point_weight(plane, s.v) && dot(*f8, *x, s.v) == f8->zero()) ++on;
        CHECK(on == 1);
    }
    // six tangents through each subplane point
    const Vec e0{f8->one(), f8->zero(), f8->zero()};
    std::size_t tangents = 0;
    for (const auto& x : enumerate_hyperplanes(*f8, 3)) {
        if (dot(*f8, x.x, e0) != f8->zero()) continue;
        if (kernels::hyperplane_meet_class(*f8, plane.matrix(), x.x) == 1) ++tangents;
    }
    CHECK(tangents == 6);
    CHECK_THROWS(find_tangent_hyperplane(subgeometry_system(f8, 2), Vec{f8->one(), f8->zero()}));
}

TEST_CASE("simplex system census") {
    auto f4 = FieldTower::make(2, 1, 2);
    const System full = system_of(simplex_code(f4, 3));
    const auto c = hyperplane_census(full);
    CHECK(c.t0 == 0);
    CHECK(c.t1 == 0);
    for (const auto& x : enumerate_hyperplanes(*f4, 3)) CHECK(hyperplane_weight(full, x.x) == 4);
}
