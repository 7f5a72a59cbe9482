#include "rankmc/rank_code.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

#include "rankmc/kernels.hpp"

namespace rankmc {

struct Code::Cache {
    std::mutex mu;
    std::optional<WeightDistribution> dist;
};

Code::Code(FieldPtr f, ExtMatrix g) : field_(std::move(f)), g_(std::move(g)), cache_(std::make_shared<Cache>()) {}

Vec Code::encode(std::span<const Elem> x) const {
    if (x.size() != k()) throw std::invalid_argument("message length must equal k");
    return kernels::encode(*field_, g_, x);
}

Code make_code(FieldPtr f, ExtMatrix g) {
    if (!f) throw std::invalid_argument("missing field");
    if (g.rows() == 0 || g.cols() == 0) throw std::invalid_argument("generator matrix is empty");
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (Elem e : g.row(r)) {
            if (e.v >= f->order()) throw std::invalid_argument("matrix entry outside the field");
        }
    }
    if (rank_ext(*f, g) != g.rows()) throw std::invalid_argument("generator matrix is rank deficient");
    return Code(std::move(f), std::move(g));
}

bool is_nondegenerate(const Code& c) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < c.k(); ++i) {
        auto r = c.generator().row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return rank_of_element_rows(c.field(), rows) == c.n();
}

std::size_t weight(const FieldTower& f, std::span<const Elem> v) { return rank_of_elements(f, v); }

const WeightDistribution& weight_distribution(const Code& c, std::uint64_t budget) {
    std::lock_guard lock(c.cache_->mu);
    if (!c.cache_->dist) {
        const auto counts = kernels::weight_counts(c.field(), c.generator(), budget);
        c.cache_->dist.emplace(counts.begin(), counts.end());
    }
    return *c.cache_->dist;
}

BigInt max_weight_count(const Code& c, std::uint64_t budget) { return weight_distribution(c, budget).back(); }

std::size_t min_distance(const Code& c, std::uint64_t budget) {
    const auto& a = weight_distribution(c, budget);
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] != 0) return i;
    }
    throw std::logic_error("code has no nonzero codeword");
}

std::optional<std::size_t> second_max_weight(const Code& c, std::uint64_t budget) {
    const auto& a = weight_distribution(c, budget);
    for (std::size_t i = a.size() - 1; i-- > 1;) {
        if (a[i] != 0) return i;
    }
    return std::nullopt;
}

bool mrd_parameters(std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    const std::uint64_t lo = std::min(m, n), hi = std::max(m, n);
    return d >= 1 && d <= lo && m * k == hi * (lo - d + 1);
}

bool is_mrd(const Code& c, std::uint64_t budget) {
    return mrd_parameters(c.field().m(), c.n(), c.k(), min_distance(c, budget));
}

WeightDistribution mrd_weight_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                                           std::uint64_t d) {
    if (!mrd_parameters(m, n, k, d)) throw std::invalid_argument("parameters are not those of an MRD code");
    const auto lo = static_cast<int>(std::min(m, n));
    const auto hi = std::max(m, n);
    const auto di = static_cast<int>(d);
    WeightDistribution a(lo + 1, 0);
    a[0] = 1;
    for (int l = 0; d + l <= static_cast<std::uint64_t>(lo); ++l) {
        BigInt s = 0;
        for (int t = 0; t <= l; ++t) {
            const int e = l - t;
            BigInt term = q_binomial(l + di, e, q) * big_pow(q, static_cast<std::uint64_t>(e) * (e - 1) / 2) *
                          (big_pow(q, hi * (t + 1)) - 1);
            if (e % 2) s -= term;
            else s += term;
        }
        a[di + l] = q_binomial(lo, di + l, q) * s;
    }
    return a;
}

std::size_t generalized_weight(const Code& c, std::size_t r, std::uint64_t budget) {
    const FieldTower& f = c.field();
    if (r < 1 || r > c.k()) throw std::invalid_argument("generalized weight index out of range");
    if (q_binomial(static_cast<int>(c.k()), static_cast<int>(r), f.order()) > budget) {
        throw BudgetExceeded("subspace enumeration exceeds the budget");
    }
    std::size_t best = c.n();
    for_each_ext_subspace(f, c.k(), r, [&](const std::vector<Vec>& ys) {
        std::vector<Vec> rows;
        for (const Vec& y : ys) rows.push_back(c.encode(y));
        best = std::min(best, rank_of_element_rows(f, rows));
        return true;
    });
    return best;
}

Code simplex_code(FieldPtr f, std::size_t k) {
    const std::size_t m = f->m();
    if (k == 0) throw std::invalid_argument("simplex code needs k >= 1");
    projective_count(*f, k);  // size cap
    ExtMatrix g(k, k * m);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < m; ++l) g(i, i * m + l) = f->default_basis()[l];
    }
    return make_code(std::move(f), std::move(g));
}

Code right_multiply(const Code& c, const FqMatrix& a) {
    const FieldTower& f = c.field();
    if (a.rows() != c.n() || a.cols() != c.n()) throw std::invalid_argument("isometry must be n x n");
    ExtMatrix g(c.k(), c.n());
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = 0; j < c.n(); ++j) {
            Elem s = f.zero();
            for (std::size_t l = 0; l < c.n(); ++l) {
                if (a(l, j)) s = f.add(s, f.mul(c.generator()(i, l), f.from_label(a(l, j))));
            }
            g(i, j) = s;
        }
    }
    return make_code(c.field_ptr(), std::move(g));
}

}  // namespace rankmc
