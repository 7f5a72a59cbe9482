#include "rankmc/kernels.hpp"

#include <algorithm>

namespace rankmc::kernels {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t budget, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= base;
        if (r > budget) throw BudgetExceeded(what);
    }
    return r;
}

void merge(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace

Vec encode(const FieldTower& f, const ExtMatrix& g, std::span<const Elem> x) {
    Vec c(g.cols(), f.zero());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) c[j] = f.add(c[j], f.mul(x[i], g(i, j)));
    }
    return c;
}

std::size_t intersection_dim(const FieldTower& f, const ExtMatrix& g, const std::vector<Vec>& functionals) {
    std::vector<Vec> rows;
    rows.reserve(functionals.size());
    for (const Vec& y : functionals) rows.push_back(encode(f, g, y));
    return g.cols() - rank_of_element_rows(f, rows);
}

int hyperplane_meet_class(const FieldTower& f, const ExtMatrix& g, std::span<const Elem> x) {
    const Vec c = encode(f, g, x);
    const std::size_t n = g.cols();
    if (rank_of_elements(f, c) == n) return 0;
    // a in F_q^n with sum a_j c_j = 0 parametrises U ∩ x^perp.
    const FqMatrix ker = left_kernel(f, expand(f, c));
    ExtMatrix span(ker.rows(), g.rows());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t a = ker(r, j);
            if (!a) continue;
            const Elem s = f.from_label(a);
            for (std::size_t i = 0; i < g.rows(); ++i) span(r, i) = f.add(span(r, i), f.mul(s, g(i, j)));
        }
    }
    return rank_ext(f, span) == 1 ? 1 : 2;
}

std::vector<std::uint64_t> weight_counts(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows();
    const std::size_t top = std::min<std::size_t>(f.m(), g.cols());
    checked_power(f.order(), k, budget, "codeword enumeration exceeds the budget");
    const auto count = static_cast<std::int64_t>(projective_count(f, k, budget));
    std::vector<std::uint64_t> total(top + 1, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(top + 1, 0);
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < count; ++i) {
            const ProjPoint x = point_at(f, k, static_cast<std::uint64_t>(i));
            ++local[rank_of_elements(f, encode(f, g, x.v))];
        }
#pragma omp critical
        merge(total, local);
    }
    for (auto& a : total) a *= f.order() - 1;
    total[0] += 1;
    return total;
}

std::vector<std::uint64_t> weight_counts_serial(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows();
    const std::size_t top = std::min<std::size_t>(f.m(), g.cols());
    const std::uint64_t total = checked_power(f.order(), k, budget, "codeword enumeration exceeds the budget");
    std::vector<std::uint64_t> counts(top + 1, 0);
    Vec x(k, f.zero());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = Elem{static_cast<std::uint32_t>(r % f.order())};
            r /= f.order();
        }
        ++counts[rank_of_elements(f, encode(f, g, x))];
    }
    return counts;
}

std::vector<std::uint64_t> point_weights(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows(), n = g.cols();
    const auto count = static_cast<std::int64_t>(projective_count(f, k, budget));
    std::vector<std::uint64_t> total(n + 1, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < count; ++i) {
            const ProjPoint p = point_at(f, k, static_cast<std::uint64_t>(i));
            ++local[intersection_dim(f, g, annihilator(f, p.v))];
        }
#pragma omp critical
        merge(total, local);
    }
    return total;
}

namespace {

// Number of nonzero vectors of U on each point of PG(k-1, q^m).
std::vector<std::uint64_t> bucket_points(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows(), n = g.cols();
    const std::uint64_t total = checked_power(f.q(), n, budget, "system enumeration exceeds the budget");
    std::vector<std::uint64_t> hits(projective_count(f, k, budget), 0);
    std::vector<std::uint32_t> a(n, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t j = 0; j < n; ++j) {
            a[j] = static_cast<std::uint32_t>(r % f.q());
            r /= f.q();
        }
        Vec u(k, f.zero());
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[j]) continue;
            const Elem s = f.from_label(a[j]);
            for (std::size_t i = 0; i < k; ++i) u[i] = f.add(u[i], f.mul(s, g(i, j)));
        }
        auto v = normalize(f, std::move(u));
        if (!v) continue;  // only if the columns are dependent
        ++hits[point_index(f, *v)];
    }
    return hits;
}

std::size_t weight_from_hits(std::uint64_t hits, std::uint64_t q) {
    std::size_t w = 0;
    std::uint64_t size = 1;
    while (size < hits + 1) {
        size *= q;
        ++w;
    }
    return w;
}

}  // namespace

std::vector<std::uint64_t> point_weights_serial(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const auto hits = bucket_points(f, g, budget);
    std::vector<std::uint64_t> out(g.cols() + 1, 0);
    for (std::uint64_t h : hits) ++out[weight_from_hits(h, f.q())];
    return out;
}

Census hyperplane_census(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows();
    const auto count = static_cast<std::int64_t>(projective_count(f, k, budget));
    std::uint64_t t0 = 0, t1 = 0, ts = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : t0, t1, ts)
    for (std::int64_t i = 0; i < count; ++i) {
        const ProjPoint x = point_at(f, k, static_cast<std::uint64_t>(i));
        switch (hyperplane_meet_class(f, g, x.v)) {
            case 0: ++t0; break;
            case 1: ++t1; break;
            default: ++ts; break;
        }
    }
    return {t0, t1, ts};
}

Census hyperplane_census_serial(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget) {
    const std::size_t k = g.rows();
    const auto hits = bucket_points(f, g, budget);
    std::vector<ProjPoint> linear_set;
    for (std::uint64_t i = 0; i < hits.size(); ++i) {
        if (hits[i]) linear_set.push_back(point_at(f, k, i));
    }
    Census c;
    for (std::uint64_t i = 0; i < hits.size(); ++i) {
        const ProjPoint x = point_at(f, k, i);
        std::size_t on = 0;
        for (const ProjPoint& p : linear_set) {
            if (dot(f, x.v, p.v).is_zero()) ++on;
        }
        if (on == 0) ++c.t0;
        else if (on == 1) ++c.t1;
        else ++c.ts;
    }
    return c;
}

}  // namespace rankmc::kernels

namespace rankmc::kernels {

std::vector<Vec> intersection_basis(const FieldTower& f, const ExtMatrix& g, const std::vector<Vec>& functionals) {
    const std::size_t n = g.cols(), k = g.rows(), m = f.m();
    FqMatrix a(n, functionals.size() * m);
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        const Vec c = encode(f, g, functionals[i]);
        for (std::size_t j = 0; j < n; ++j) f.coords(c[j], a.row(j).subspan(i * m, m));
    }
    const FqMatrix ker = left_kernel(f, a);
    std::vector<Vec> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vec u(k, f.zero());
        for (std::size_t j = 0; j < n; ++j) {
            if (!ker(r, j)) continue;
            const Elem s = f.from_label(ker(r, j));
            for (std::size_t i = 0; i < k; ++i) u[i] = f.add(u[i], f.mul(s, g(i, j)));
        }
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace rankmc::kernels
