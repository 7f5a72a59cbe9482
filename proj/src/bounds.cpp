#include "rankmc/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rankmc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::AttainedLower: return "attained-lower";
        case Verdict::Interior: return "interior";
        case Verdict::AttainedUpper: return "attained-upper";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "inapplicable";
}

BoundReport& BoundReport::observe(const BigInt& m) {
    observed = m;
    if (!applicable) verdict = Verdict::Inapplicable;
    else if (m < lower || m > upper) verdict = Verdict::Violated;
    else if (m == lower) verdict = Verdict::AttainedLower;
    else if (m == upper) verdict = Verdict::AttainedUpper;
    else verdict = Verdict::Interior;
    return *this;
}

BoundReport inapplicable(std::string name, std::string note) {
    BoundReport r;
    r.name = std::move(name);
    r.note = std::move(note);
    return r;
}

namespace {

BigInt qpow(std::uint64_t q, std::uint64_t e) { return big_pow(q, e); }

// floor((q^a - 1)/(q^b - 1))
BigInt ratio_floor(std::uint64_t q, std::uint64_t a, std::uint64_t b) { return (qpow(q, a) - 1) / (qpow(q, b) - 1); }

BigInt product_minus(std::uint64_t q, std::uint64_t m, std::uint64_t from, std::int64_t to) {
    BigInt p = 1;
    const BigInt Q = qpow(q, m);
    for (std::int64_t i = static_cast<std::int64_t>(from); i <= to; ++i) p *= Q - qpow(q, static_cast<std::uint64_t>(i));
    return p;
}

BoundReport make(std::string name, BigInt lower, BigInt upper) {
    BoundReport r;
    r.name = std::move(name);
    r.applicable = true;
    r.lower = std::move(lower);
    r.upper = std::move(upper);
    r.verdict = Verdict::Interior;
    return r;
}

BigInt per_unit(const BigInt& M, std::uint64_t q, std::uint64_t m) {
    const BigInt unit = qpow(q, m) - 1;
    if (M < 0 || M % unit != 0) throw std::invalid_argument("M is not a multiple of q^m - 1");
    return M / unit;
}

std::uint64_t log_floor_checked(std::uint64_t q, const BigInt& x) {
    if (x < 1) throw std::invalid_argument("M outside the range of the recovery formula");
    return static_cast<std::uint64_t>(floor_log(q, x));
}

}  // namespace

BigInt projective_size(std::uint64_t q, std::uint64_t m, std::uint64_t k) {
    return (qpow(q, m * k) - 1) / (qpow(q, m) - 1);
}

SubgeometryCensus subgeometry_census(std::uint64_t q, std::uint64_t m, std::uint64_t k) {
    if (k < 2 || k > m) throw std::invalid_argument("subgeometry census needs 2 <= k <= m");
    SubgeometryCensus c;
    const BigInt total = projective_size(q, m, k);
    c.gamma = product_minus(q, m, 1, static_cast<std::int64_t>(k) - 1);
    c.delta = gauss_sum(q, static_cast<int>(k)) * product_minus(q, m, 1, static_cast<std::int64_t>(k) - 2);
    c.beta = total - c.gamma - c.delta;
    c.alpha = total - c.gamma;
    return c;
}

BoundReport bounds_dim2(std::uint64_t q, std::uint64_t m, std::uint64_t n, bool has_weight_n_minus_1) {
    if (n > m) throw std::invalid_argument("two-dim bound needs n <= m");
    if (n < 2) return inapplicable("two-dim", "a spanning system in dimension two needs n >= 2");
    const BigInt top = qpow(q, 2 * m) - 1, unit = qpow(q, m) - 1;
    BoundReport r = make("two-dim", top - unit * gauss_sum(q, static_cast<int>(n)), top - unit * (q + 1));
    if (has_weight_n_minus_1) {
        r.upper = top - unit * (qpow(q, n - 1) + 1);
        r.refined = true;
    }
    return r;
}

BoundReport bounds_dim2_e(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t e) {
    if (n > m) throw std::invalid_argument("two-dim bound needs n <= m");
    if (e < 1 || e >= n) throw std::invalid_argument("second-weight offset e must satisfy 1 <= e < n");
    if (m == n && m % e != 0) return inapplicable("two-dim-second-weight", "n = m forces e | m");
    const BigInt top = qpow(q, 2 * m) - 1, unit = qpow(q, m) - 1;
    return make("two-dim-second-weight", top - unit * ratio_floor(q, n, e), top - unit * (qpow(q, n - e) + 1));
}

std::uint64_t recover_n(const BigInt& M, std::uint64_t q, std::uint64_t m, std::uint64_t e) {
    return log_floor_checked(q, qpow(q, m) + 1 - per_unit(M, q, m)) + e;
}

BoundReport bounds_dim2_dual(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::optional<std::uint64_t> e,
                             bool hypothesis) {
    const std::string name = e ? "two-dim-long-second-weight" : "two-dim-long";
    if (n <= m || n >= 2 * m) throw std::invalid_argument("two-dim long bound needs m < n < 2m");
    if (!hypothesis) return inapplicable(name, "minimum distance below n - m + 1");
    const std::uint64_t dual_rank = 2 * m - n;
    if (dual_rank < 2) return inapplicable(name, "dual system of rank 1 cannot span");
    const BigInt top = qpow(q, 2 * m) - 1, unit = qpow(q, m) - 1;
    if (!e) return make(name, top - unit * gauss_sum(q, static_cast<int>(dual_rank)), top - unit * (q + 1));
    if (*e < 1 || *e >= dual_rank) return inapplicable(name, "e outside 1 <= e < 2m - n");
    return make(name, top - unit * ratio_floor(q, dual_rank, *e), top - unit * (qpow(q, dual_rank - *e) + 1));
}

std::uint64_t recover_n_dual(const BigInt& M, std::uint64_t q, std::uint64_t m, std::uint64_t e) {
    return 2 * m - log_floor_checked(q, qpow(q, m) + 1 - per_unit(M, q, m)) - e;
}

BoundReport bounds_k_nlem(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k) {
    if (k < 3 || k > n || n > m) throw std::invalid_argument("short bound needs 3 <= k <= n <= m");
    const BigInt unit = qpow(q, m) - 1;
    const BigInt beta = subgeometry_census(q, m, k).beta;
    const BigInt lower = projective_size(q, m, k) - gauss_sum(q, static_cast<int>(n)) * projective_size(q, m, k - 1) +
                         BigInt(q) * beta;
    const BigInt upper = product_minus(q, m, 1, static_cast<std::int64_t>(n) - 1);
    return make("short", unit * lower, unit * upper);
}

BoundReport bounds_k_nlem_e(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t e) {
    if (k < 3 || n > m) throw std::invalid_argument("short second-weight bound needs k >= 3 and n <= m");
    if (e < 1 || e >= n) throw std::invalid_argument("second-weight offset e must satisfy 1 <= e < n");
    const BigInt unit = qpow(q, m) - 1;
    const BigInt upper = qpow(q, m * (k - 1)) - qpow(q, m * (k - 2) + n - e);
    const BigInt lower = upper - qpow(q, m * (k - 2)) * ratio_floor(q, n - e, e);
    BoundReport r = make("short-second-weight", unit * lower, unit * upper);
    r.proof_tight_lower = unit * (lower + qpow(q, m * (k - 2)));
    return r;
}

std::uint64_t recover_k_nlem(std::uint64_t q, std::uint64_t m, std::uint64_t k, std::uint64_t e, const BigInt& M) {
    return log_floor_checked(q, qpow(q, m * (k - 1)) - per_unit(M, q, m)) + e;
}

BoundReport bounds_k_mlen(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                          std::optional<std::uint64_t> e, bool hypothesis) {
    const std::string name = e ? "long-second-weight" : "long";
    if (k < 2 || n < m) throw std::invalid_argument("long bound needs k >= 2 and m <= n");
    if (n > k * m) throw std::invalid_argument("a system has rank at most km");
    const std::uint64_t dual_rank = k * m - n;
    if (dual_rank < k) return inapplicable(name, "dual system of rank below k cannot span");
    if (!hypothesis) return inapplicable(name, "d_{k-1} below n - m + 1");
    const BigInt total = projective_size(q, m, k), unit = qpow(q, m) - 1;
    if (!e) {
        return make(name, unit * (total - gauss_sum(q, static_cast<int>(dual_rank))),
                    unit * (total - gauss_sum(q, static_cast<int>(k))));
    }
    if (*e < 1 || *e >= dual_rank) return inapplicable(name, "e outside 1 <= e < km - n");
    return make(name, unit * (total - ratio_floor(q, dual_rank, *e)),
                unit * (total - (qpow(q, dual_rank - *e) + gauss_sum(q, static_cast<int>(k) - 1))));
}

std::uint64_t recover_k_mlen(std::uint64_t q, std::uint64_t m, std::uint64_t k, std::uint64_t e, const BigInt& M) {
    return log_floor_checked(q, projective_size(q, m, k) - per_unit(M, q, m)) + e;
}

BigInt bound_subgeom_upper(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t r) {
    if (r < 1 || r >= k) throw std::invalid_argument("subgeometry bound needs 1 <= r < k");
    if (n < m || n >= k * m) throw std::invalid_argument("subgeometry bound needs m <= n < km");
    const std::uint64_t dual_rank = k * m - n;
    BigInt s = gauss_sum(q, static_cast<int>(r));
    for (std::uint64_t j = 1; j <= k - r; ++j) {
        if (j > dual_rank) throw std::invalid_argument("subgeometry bound needs km - n >= k - r");
        s += qpow(q, dual_rank - j);
    }
    return projective_size(q, m, k) - s;
}

BoundReport bounds_subgeom(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t r) {
    const BigInt unit = qpow(q, m) - 1;
    const std::uint64_t dual_rank = k * m - n;
    BoundReport rep = make("long-subgeometry-r" + std::to_string(r),
                           unit * (projective_size(q, m, k) - gauss_sum(q, static_cast<int>(dual_rank))),
                           unit * bound_subgeom_upper(q, m, n, k, r));
    return rep;
}

bool check_subgeom_hypothesis(const Code& dual, std::size_t r, std::uint64_t budget) {
    const FieldTower& f = dual.field();
    const std::size_t k = dual.k();
    if (r < 1 || r >= k) throw std::invalid_argument("subgeometry hypothesis needs 1 <= r < k");
    if (q_binomial(static_cast<int>(k), static_cast<int>(r), f.order()) > budget) {
        throw BudgetExceeded("subspace search exceeds the budget");
    }
    bool found = false;
    for_each_ext_subspace(f, k, r, [&](const std::vector<Vec>& ys) {
        const auto w = kernels::intersection_basis(f, dual.generator(), ys);
        if (w.size() != k - r) return true;
        ExtMatrix span(w.size(), k);
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < k; ++j) span(i, j) = w[i][j];
        }
        found = rank_ext(f, span) == k - r;
        return !found;
    });
    return found;
}

MaxHypotheses check_max_hypotheses(MaxFamily family, std::uint64_t q, std::uint64_t m, std::uint64_t k,
                                   const std::vector<std::uint64_t>& t, std::uint64_t sub_degree) {
    if (t.size() != k) throw std::invalid_argument("t must have k entries");
    MaxHypotheses h;
    std::set<std::int64_t, std::greater<>> s;
    std::int64_t sum_t = 0;
    for (std::uint64_t ti : t) {
        sum_t += static_cast<std::int64_t>(ti);
        s.insert(family == MaxFamily::Poly ? static_cast<std::int64_t>(m) - static_cast<std::int64_t>(ti) - 1
                                           : static_cast<std::int64_t>(ti) - 1);
    }
    h.s_values.assign(s.begin(), s.end());

    // sum (q^s - 2 q^{s/2}) / s = A - B sqrt(q), A and B rational.
    h.sum_applicable = !h.s_values.empty() && h.s_values.back() > 0;
    if (h.sum_applicable) {
        BigRational a = 0, b = 0;
        for (std::int64_t si : h.s_values) {
            const auto su = static_cast<std::uint64_t>(si);
            a += BigRational(qpow(q, su), si);
            if (su % 2 == 0) a -= BigRational(2 * qpow(q, su / 2), si);
            else b += BigRational(2 * qpow(q, (su - 1) / 2), si);
        }
        const BigRational slack = a - BigRational(static_cast<std::int64_t>(k));
        h.sum_condition = slack >= 0 && slack * slack >= b * b * BigRational(static_cast<std::int64_t>(q));
    }

    const auto kk = static_cast<std::int64_t>(k), mm = static_cast<std::int64_t>(m);
    if (family == MaxFamily::Poly) {
        h.count_lhs = mm * kk - kk - sum_t;
        const std::int64_t n = sum_t;
        h.shape_condition = mm <= n && kk * mm - n <= mm + kk;
    } else {
        h.count_lhs = sum_t - kk;
        h.shape_condition = sum_t <= static_cast<std::int64_t>(sub_degree) + kk;
    }
    h.count_condition = h.count_lhs <= q;
    return h;
}

bool Classification::consistent() const {
    for (const auto& c : checks) {
        if (!c.agrees()) return false;
    }
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Violated) return false;
    }
    return true;
}

namespace {

bool attained_lower(const BoundReport& r) { return r.applicable && r.verdict == Verdict::AttainedLower; }

bool at_upper(const BoundReport& r) { return r.applicable && r.observed && *r.observed == r.upper; }

}  // namespace

Classification classify_extremal(const Code& c, std::uint64_t budget) {
    Classification out;
    const auto& dist = weight_distribution(c, budget);
    const FieldTower& f = c.field();
    const std::uint64_t q = f.q(), m = f.m(), n = c.n(), k = c.k();
    out.q = q;
    out.m = m;
    out.n = n;
    out.k = k;
    out.M = dist.back();
    out.d = min_distance(c, budget);
    out.mrd = is_mrd(c, budget);
    const std::uint64_t top = std::min(m, n);
    if (auto smw = second_max_weight(c, budget)) out.e = top - *smw;
    if (k < 2) return out;

    const System u = system_of(c);
    const System dual = dual_system(u);
    const bool dual_spans = dual.spans();
    // The dual spans exactly when d_{k-1} >= n - m + 1.
    const std::size_t dk1 = generalized_weight(c, k - 1, budget);
    out.checks.push_back({"dual-spans-iff-generalized-weight", dual_spans, dk1 + m >= n + 1, true});
    auto add = [&](BoundReport r) {
        r.observe(out.M);
        out.reports.push_back(std::move(r));
        return out.reports.size() - 1;
    };
    auto dual_is_mrd = [&] { return dual_spans && is_mrd(code_of(dual), budget); };

    if (k == 2 && n <= m) {
        const bool has_nm1 = n >= 2 && dist[n - 1] != 0;
        const std::size_t at = add(bounds_dim2(q, m, n, has_nm1));
        if (out.e) add(bounds_dim2_e(q, m, n, *out.e));
        const BoundReport base = out.reports[at];
        if (base.applicable) {
            const bool is_min = attained_lower(base);
            out.checks.push_back({"two-dim-min-iff-scattered", is_min, is_scattered(u, budget), true});
            out.checks.push_back({"two-dim-min-iff-code-or-dual-mrd", is_min, out.mrd || dual_is_mrd(), true});
            if (n < m) {
                const BigInt base_upper = (big_pow(q, 2 * m) - 1) - (big_pow(q, m) - 1) * (q + 1);
                out.checks.push_back({"two-dim-max-iff-full-space", out.M == base_upper, n == k, true});
            }
        }
    }
    if (k == 2 && n > m && n < 2 * m) {
        const std::size_t at = add(bounds_dim2_dual(q, m, n, {}, dual_spans));
        if (out.e) add(bounds_dim2_dual(q, m, n, out.e, dual_spans));
        const BoundReport base = out.reports[at];
        if (base.applicable) {
            const bool is_min = attained_lower(base);
            out.checks.push_back({"two-dim-min-iff-code-or-dual-mrd", is_min, out.mrd || dual_is_mrd(), true});
            out.checks.push_back({"min-iff-dual-scattered", is_min, is_scattered(dual, budget), true});
            out.checks.push_back({"max-iff-dual-full-space", at_upper(base), n == m * k - k, true});
        }
    }
    if (k >= 3 && n <= m) {
        const std::size_t at = add(bounds_k_nlem(q, m, n, k));
        if (out.e) add(bounds_k_nlem_e(q, m, n, k, *out.e));
        const BoundReport base = out.reports[at];
        if (n < m) {
            const bool is_min = attained_lower(base);
            out.checks.push_back({"short-min-forces-full-space", is_min, n == k, false});
            out.checks.push_back({"short-max-iff-full-space", at_upper(base), n == k, true});
        }
    }
    if (k >= 3 && n >= m && n < k * m) {
        const std::size_t at = add(bounds_k_mlen(q, m, n, k, {}, dual_spans));
        if (out.e) add(bounds_k_mlen(q, m, n, k, out.e, dual_spans));
        const BoundReport base = out.reports[at];
        if (base.applicable) {
            const bool is_min = attained_lower(base);
            out.checks.push_back({"min-iff-dual-scattered", is_min, is_scattered(dual, budget), true});
            out.checks.push_back({"min-forces-half-rank", is_min, 2 * n >= k * m, false});
            if (out.mrd) out.checks.push_back({"mrd-min-iff-half-rank", is_min, 2 * n == k * m, true});
            if (2 * n == k * m) out.checks.push_back({"half-rank-min-iff-mrd", is_min, out.mrd, true});
            out.checks.push_back({"max-iff-dual-full-space", at_upper(base), n == m * k - k, true});
            const Code dual_code = code_of(dual);
            for (std::uint64_t r = 1; r < k; ++r) {
                if (k - r > k * m - n) continue;
                if (!check_subgeom_hypothesis(dual_code, r, budget)) continue;
                add(bounds_subgeom(q, m, n, k, r));
            }
        }
    }
    for (const auto& r : out.reports) {
        if (r.applicable) {
            out.verdict = r.verdict;
            break;
        }
    }
    return out;
}

}  // namespace rankmc
