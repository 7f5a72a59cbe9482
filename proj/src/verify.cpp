#include "rankmc/verify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "rankmc/bounds.hpp"
#include "rankmc/constructions.hpp"
#include "rankmc/sampling.hpp"

namespace rankmc {

namespace {

FieldPtr field(std::uint32_t q, std::uint32_t m) {
    std::uint32_t p = q, h = 1;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            h = 0;
            for (std::uint32_t r = q; r > 1; r /= d) ++h;
            break;
        }
    }
    return FieldTower::make(p, h, m);
}

struct Suite {
    std::string name;
    std::vector<CheckResult>& out;

    void check(const std::string& check_name, const std::function<std::string()>& body) {
        CheckResult r{name, check_name, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.rfind("FAIL", 0) != 0;
            if (!r.passed) r.detail = r.detail.substr(5);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
};

std::string fail(const std::string& why) { return "FAIL " + why; }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void duality_suite(std::vector<CheckResult>& out) {
    Suite s{"duality", out};
    s.check("point-hyperplane-weight-relation", [] {
        Rng rng(101);
        std::size_t pairs = 0;
        for (int trial = 0; trial < 24; ++trial) {
            const std::uint32_t m = 2 + trial % 2;
            const std::size_t k = 2 + (trial / 2) % 2;
            const std::size_t n = k + rng() % (k * m - k);
            auto f = field(2, m);
            const System u = random_system(f, k, n, rng);
            const System w = dual_system(u);
            const long shift = static_cast<long>(k * m) - static_cast<long>(n);
            for (const auto& p : enumerate_points(*f, k)) {
                const long lhs = static_cast<long>(hyperplane_weight(w, p.v));
                const long rhs = static_cast<long>(point_weight(u, p.v)) + shift - static_cast<long>(m);
                if (lhs != rhs) return fail("hyperplane side, trial " + std::to_string(trial));
                const long lhs2 = static_cast<long>(point_weight(w, p.v));
                const long rhs2 = static_cast<long>(hyperplane_weight(u, p.v)) + shift -
                                  static_cast<long>((k - 1) * m);
                if (lhs2 != rhs2) return fail("point side, trial " + std::to_string(trial));
                ++pairs;
            }
        }
        return std::to_string(pairs) + " point/hyperplane pairs over 24 systems";
    });
    s.check("double-dual-is-identity", [] {
        Rng rng(102);
        for (int trial = 0; trial < 24; ++trial) {
            const std::uint32_t m = 2 + trial % 2;
            const std::size_t k = 2 + (trial / 2) % 2;
            const std::size_t n = k + rng() % (k * m - k);
            const System u = random_system(field(2, m), k, n, rng);
            if (!same_subspace(dual_system(dual_system(u)), u)) return fail("trial " + std::to_string(trial));
        }
        return std::string("24 systems");
    });
    s.check("scattered-iff-dual-scattered", [] {
        Rng rng(103);
        std::size_t scattered = 0;
        for (int trial = 0; trial < 24; ++trial) {
            const std::uint32_t m = trial % 2 ? 3 : 2;
            const std::size_t k = 2;
            const std::size_t n = k * m / 2;
            if (n < k) continue;
            const System u = random_system(field(2, m), k, n, rng);
            const bool a = is_scattered(u);
            if (a != is_scattered(dual_system(u))) return fail("trial " + std::to_string(trial));
            scattered += a;
        }
        return std::to_string(scattered) + " of 24 half-rank systems scattered";
    });
}

void census_suite(std::vector<CheckResult>& out) {
    Suite s{"census", out};
    const std::vector<std::array<std::uint32_t, 3>> params = {{2, 3, 3}, {2, 3, 2}, {2, 4, 3}, {3, 3, 3}, {2, 4, 4}};
    for (const auto& [q, m, k] : params) {
        const std::string tag = std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(k);
        s.check("subgeometry-hyperplane-census(" + tag + ")", [q = q, m = m, k = k] {
            const auto u = subgeometry_system(field(q, m), k);
            const auto c = hyperplane_census(u, 1u << 22);
            const auto cf = subgeometry_census(q, m, k);
            std::ostringstream os;
            os << "(" << c.t0 << "," << c.t1 << "," << c.ts << ")";
            if (BigInt(c.t0) != cf.gamma || BigInt(c.t1) != cf.delta || BigInt(c.ts) != cf.beta) {
                return fail(os.str() + " disagrees with closed form");
            }
            if (cf.gamma + cf.delta + cf.beta != projective_size(q, m, k)) return fail("census does not sum");
            if (cf.alpha != cf.delta + cf.beta) return fail("alpha mismatch");
            return os.str();
        });
    }
}

void bounds_suite(std::vector<CheckResult>& out) {
    Suite s{"bounds", out};
    auto f8 = field(2, 3);
    s.check("mrd-attains-two-dim-lower", [&] {
        const Code c = gabidulin(f8, 3, 2);
        const auto cl = classify_extremal(c);
        if (cl.M != 14 || cl.verdict != Verdict::AttainedLower || !cl.mrd) return fail("M=" + to_decimal(cl.M));
        if (recover_n(cl.M, 2, 3, *cl.e) != 3) return fail("recovery");
        return std::string("M=14");
    });
    s.check("two-dim-min-iff-scattered-iff-mrd", [] {
        auto f4 = field(2, 2);
        std::size_t spanning = 0;
        std::string bad;
        for_each_fq_subspace(*f4, 4, 2, [&](const FqMatrix& a) {
            const System u = system_from_coords(f4, 2, a);
            if (!u.spans()) return true;
            ++spanning;
            const Code c = code_of(u);
            const bool min = max_weight_count(c) == 6;
            if (min != is_scattered(u) || min != is_mrd(c)) bad = "disagreement";
            return true;
        });
        if (!bad.empty()) return fail(bad);
        return std::to_string(spanning) + " spanning subspaces of F_4^2";
    });
    s.check("poly-attains-two-dim-upper", [&] {
        const auto cl = classify_extremal(poly_code(f8, {1, 2}));
        if (cl.M != 28 || cl.verdict != Verdict::AttainedUpper) return fail("M=" + to_decimal(cl.M));
        return std::string("M=28");
    });
    s.check("scattered-dual-attains-long-lower", [&] {
        const Code c = redei_code(f8);
        const auto cl = classify_extremal(c);
        if (cl.M != 7 * 58 || cl.verdict != Verdict::AttainedLower || cl.mrd) return fail("M=" + to_decimal(cl.M));
        if (recover_k_mlen(2, 3, 3, *cl.e, cl.M) != 4) return fail("recovery");
        return std::string("M=406");
    });
    s.check("short-full-space-forced-value", [&] {
        Rng rng(104);
        for (int i = 0; i < 50; ++i) {
            const Code c = code_of(random_system(f8, 3, 3, rng));
            const auto cl = classify_extremal(c);
            const auto r = bounds_k_nlem(2, 3, 3, 3);
            if (cl.M != 168 || r.lower != r.upper || r.lower != 168) return fail("sample " + std::to_string(i));
            if (cl.e && recover_k_nlem(2, 3, 3, *cl.e, cl.M) != 6) return fail("recovery at sample " + std::to_string(i));
        }
        return std::string("50 random [3,3] codes, M=168");
    });
    s.check("classification-self-consistent", [] {
        Rng rng(105);
        std::size_t n_checked = 0;
        for (std::uint32_t m : {2u, 3u}) {
            for (std::size_t k : {2u, 3u}) {
                for (std::size_t n = k; n < k * m; ++n) {
                    for (int i = 0; i < 3; ++i) {
                        const Code c = code_of(random_system(field(2, m), k, n, rng));
                        const auto cl = classify_extremal(c);
                        if (!cl.consistent()) {
                            return fail("m=" + std::to_string(m) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
                        }
                        ++n_checked;
                    }
                }
            }
        }
        return std::to_string(n_checked) + " random codes";
    });
}

void constructions_suite(std::vector<CheckResult>& out) {
    Suite s{"constructions", out};
    const std::vector<std::array<std::uint32_t, 4>> poly = {
        {2, 3, 1, 2}, {2, 4, 1, 2}, {2, 4, 2, 2}, {2, 4, 1, 3}, {3, 3, 1, 2}, {2, 5, 2, 3}};
    s.check("poly-two-row-closed-form", [&] {
        for (const auto& [q, m, t1, t2] : poly) {
            const Code c = poly_code(field(q, m), {t1, t2});
            if (weight_distribution(c) != poly_k2_distribution(q, m, t1, t2)) {
                return fail(std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(t1) + "," + std::to_string(t2));
            }
        }
        return std::to_string(poly.size()) + " parameter sets";
    });
    s.check("poly-two-row-spectrum", [&] {
        for (const auto& [q, m, t1, t2] : poly) {
            const auto got = point_spectrum(system_of(poly_code(field(q, m), {t1, t2})));
            if (got != vdv_spectrum(q, m, t1, t2)) return fail(std::to_string(q) + "," + std::to_string(m));
        }
        return std::to_string(poly.size()) + " parameter sets";
    });
    s.check("poly-two-row-reaches-upper", [] {
        std::size_t count = 0;
        for (std::uint32_t m : {3u, 4u, 5u}) {
            auto f = field(2, m);
            for (std::uint32_t t1 = 1; t1 < m; ++t1) {
                for (std::uint32_t t2 = t1; t2 < m; ++t2) {
                    const std::uint32_t n = t1 + t2;
                    if (n < 3 || n > 2 * m - 3) continue;
                    const Code c = poly_code(f, {t1, t2});
                    const std::size_t top = std::min(m, n);
                    if (weight_distribution(c)[top - 1] == 0) return fail("no weight min(m,n)-1 codeword");
                    const BigInt Q = big_pow(2, m);
                    const BigInt expected = n <= m ? Q * Q - 1 - (Q - 1) * (big_pow(2, n - 1) + 1)
                                                   : Q * Q - 1 - (Q - 1) * (big_pow(2, 2 * m - n - 1) + 1);
                    if (max_weight_count(c) != expected) return fail("M mismatch at m=" + std::to_string(m));
                    ++count;
                }
            }
        }
        return std::to_string(count) + " codes";
    });
    s.check("poly-geometric-dual-complements-t", [] {
        const std::vector<std::array<std::uint32_t, 4>> cases = {{2, 3, 1, 2}, {2, 4, 1, 2}, {2, 4, 1, 3}, {2, 4, 2, 3}};
        for (const auto& [q, m, t1, t2] : cases) {
            auto f = field(q, m);
            const Code d = geometric_dual(poly_code(f, {t1, t2}));
            if (weight_distribution(d) != weight_distribution(poly_code(f, {m - t1, m - t2}))) {
                return fail(std::to_string(m) + "," + std::to_string(t1) + "," + std::to_string(t2));
            }
        }
        return std::to_string(cases.size()) + " cases";
    });
    s.check("gabidulin-is-mrd", [] {
        const std::vector<std::array<std::uint32_t, 4>> cases = {{2, 3, 3, 2}, {2, 4, 3, 2}, {2, 4, 4, 2}, {3, 3, 3, 2}, {2, 3, 3, 3}};
        for (const auto& [q, m, n, k] : cases) {
            const Code c = gabidulin(field(q, m), n, k);
            if (!is_mrd(c) || min_distance(c) != n - k + 1 ||
                weight_distribution(c) != mrd_weight_distribution(q, m, n, k, n - k + 1)) {
                return fail(std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k));
            }
        }
        return std::to_string(cases.size()) + " codes";
    });
    s.check("lifted-parameters", [] {
        auto f = field(2, 4);
        LiftedSpec ls;
        ls.sub_degree = 2;
        ls.ell = 1;
        ls.t = {1, 2};
        const Code c = lifted_poly_code(f, ls);
        if (c.n() != 5 || c.k() != 2 || min_distance(c) != 2) return fail("code parameters");
        const Code d = geometric_dual(c);
        if (d.n() != 3 || d.k() != 2 || min_distance(d) != 1) return fail("dual parameters");
        return std::string("[5,2,2] with dual [3,2,1]");
    });
    s.check("lifted-two-row-closed-form", [] {
        const std::vector<std::array<std::uint32_t, 4>> cases = {{2, 1, 1, 2}, {2, 1, 2, 1}, {2, 2, 1, 1}, {3, 1, 1, 2}, {3, 1, 2, 1}, {3, 1, 1, 1}};
        for (const auto& [t, ell, t1, t2] : cases) {
            auto f = field(2, 6);
            LiftedSpec ls;
            ls.sub_degree = t;
            ls.ell = ell;
            ls.t = {t1, t2};
            const Code c = lifted_poly_code(f, ls);
            const auto& w = weight_distribution(c);
            if (w != lifted_k2_distribution(2, 6, ell * t, t1, t2)) return fail("t=" + std::to_string(t));
            if (c.n() <= 6 && w[c.n() - 1] == 0) return fail("no weight n-1 codeword");
        }
        return std::to_string(cases.size()) + " codes over F_64";
    });
    s.check("constructions-nondegenerate", [] {
        auto f = field(2, 4);
        for (const auto& t : std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {3, 2, 1}, {2, 2, 2}, {3, 3}}) {
            if (!is_nondegenerate(poly_code(f, t))) return fail("poly " + join(t));
        }
        return std::string("4 poly codes");
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"duality", "census", "bounds", "constructions", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "duality") duality_suite(out), known = true;
    if (all || suite == "census") census_suite(out), known = true;
    if (all || suite == "bounds") bounds_suite(out), known = true;
    if (all || suite == "constructions") constructions_suite(out), known = true;
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace rankmc
