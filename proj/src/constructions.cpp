#include "rankmc/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankmc {

namespace {

void put_block(const FieldTower& f, ExtMatrix& g, std::size_t row, std::size_t col, Elem base, std::uint64_t len) {
    Elem p = f.one();
    for (std::uint64_t j = 0; j < len; ++j) {
        g(row, col + j) = p;
        p = f.mul(p, base);
    }
}

FqSubspace span_of(const FieldTower& f, std::span<const Elem> xs) {
    FqMatrix a = expand(f, xs);
    return FqSubspace::span(f, std::move(a));
}

}  // namespace

Code poly_code(FieldPtr f, Elem lambda, std::vector<std::uint64_t> t) {
    if (t.empty()) throw std::invalid_argument("t sequence is empty");
    if (lambda.v >= f->order() || f->degree_over_fq(lambda) != f->m() || f->m() < 2) {
        throw std::invalid_argument("lambda must generate F_{q^m} over F_q");
    }
    std::sort(t.begin(), t.end());
    for (auto ti : t) {
        if (ti < 1 || ti > f->m() - 1) throw std::invalid_argument("each t_i must lie in [1, m-1]");
    }
    std::uint64_t n = 0;
    for (auto ti : t) n += ti;
    ExtMatrix g(t.size(), n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        put_block(*f, g, i, col, lambda, t[i]);
        col += t[i];
    }
    return make_code(std::move(f), std::move(g));
}

Code poly_code(FieldPtr f, std::vector<std::uint64_t> t) {
    const Elem lambda = f->find_generator();
    return poly_code(std::move(f), lambda, std::move(t));
}

Vec lifted_s_basis(const FieldTower& f, const LiftedSpec& spec) {
    const std::uint64_t m = f.m(), t = spec.sub_degree;
    if (t < 1 || m % t != 0) throw std::invalid_argument("sub-degree t must divide m");
    const std::uint64_t ell_prime = m / t;
    if (spec.ell < 1 || spec.ell >= ell_prime) throw std::invalid_argument("need 1 <= ell < m/t");
    const Elem mu = spec.mu ? *spec.mu : f.find_subfield_generator(static_cast<std::uint32_t>(t));
    if (mu.v >= f.order() || f.degree_over_fq(mu) != t) throw std::invalid_argument("mu must generate F_{q^t}");

    Vec basis;
    if (spec.s_basis) {
        basis = *spec.s_basis;
    } else {
        const Elem g = f.find_generator();
        Elem gi = g;
        for (std::uint64_t i = 1; i <= spec.ell; ++i) {
            Elem p = gi;
            for (std::uint64_t j = 0; j < t; ++j) {
                basis.push_back(p);
                p = f.mul(p, mu);
            }
            gi = f.mul(gi, g);
        }
    }
    if (basis.size() != spec.ell * t) throw std::invalid_argument("S basis must have ell*t elements");
    const FqSubspace s = span_of(f, basis);
    if (s.dim() != basis.size()) throw std::invalid_argument("S basis is F_q-dependent");
    for (Elem c : basis) {
        const Elem shifted = f.mul(c, mu);
        if (!s.contains(f, expand(f, std::span(&shifted, 1)).row(0))) {
            throw std::invalid_argument("S is not closed under multiplication by F_{q^t}");
        }
    }
    Vec sub;
    Elem p = f.one();
    for (std::uint64_t j = 0; j < t; ++j) {
        sub.push_back(p);
        p = f.mul(p, mu);
    }
    const Elem one = f.one();
    if (s.contains(f, expand(f, std::span(&one, 1)).row(0))) {
        throw std::invalid_argument("S contains 1; choose another S");
    }
    if (intersect(f, s, span_of(f, sub)).dim() != 0) throw std::invalid_argument("S meets F_{q^t} nontrivially");
    return basis;
}

Code lifted_poly_code(FieldPtr f, const LiftedSpec& spec) {
    if (spec.t.empty()) throw std::invalid_argument("t sequence is empty");
    const Vec c = lifted_s_basis(*f, spec);
    const Elem mu = spec.mu ? *spec.mu : f->find_subfield_generator(static_cast<std::uint32_t>(spec.sub_degree));
    for (std::size_t i = 0; i < spec.t.size(); ++i) {
        if (spec.t[i] < 1 || spec.t[i] > spec.sub_degree) throw std::invalid_argument("each t_i must lie in [1, t]");
        for (std::size_t j = i + 1; j < spec.t.size(); ++j) {
            if (spec.t[i] + spec.t[j] > spec.sub_degree + 1) throw std::invalid_argument("need t_i + t_j <= t + 1");
        }
    }
    std::uint64_t n = c.size();
    for (auto ti : spec.t) n += ti;
    ExtMatrix g(spec.t.size(), n);
    for (std::size_t j = 0; j < c.size(); ++j) g(0, j) = c[j];
    std::size_t col = c.size();
    for (std::size_t i = 0; i < spec.t.size(); ++i) {
        put_block(*f, g, i, col, mu, spec.t[i]);
        col += spec.t[i];
    }
    return make_code(std::move(f), std::move(g));
}

Code gabidulin(FieldPtr f, std::size_t n, std::size_t k) {
    if (k < 1 || k > n || n > f->m()) throw std::invalid_argument("gabidulin needs 1 <= k <= n <= m");
    ExtMatrix g(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem x = f->default_basis()[j];
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = f->frobenius(x);
        }
    }
    return make_code(std::move(f), std::move(g));
}

System redei_scattered_system(FieldPtr f) {
    if (f->m() < 2) throw std::invalid_argument("the scattered system needs m >= 2");
    std::vector<Vec> basis;
    for (Elem x : f->default_basis()) basis.push_back({x, f->frobenius(x), f->zero()});
    basis.push_back({f->zero(), f->zero(), f->one()});
    return make_system(std::move(f), 3, std::move(basis));
}

Code redei_code(FieldPtr f) { return code_of(dual_system(redei_scattered_system(std::move(f)))); }

PointSpectrum vdv_spectrum(std::uint64_t q, std::uint64_t m, std::uint64_t t1, std::uint64_t t2) {
    if (t1 < 1 || t1 > t2 || t1 + t2 > m) throw std::invalid_argument("need 1 <= t1 <= t2 and t1 + t2 <= m");
    const std::uint64_t n = t1 + t2;
    auto pw = [q](std::uint64_t e) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    PointSpectrum s;
    s.N.assign(n + 1, 0);
    s.N[t2] += 1;
    s.N[t1] += pw(t2 - t1 + 1);
    for (std::uint64_t i = 1; i < t1; ++i) s.N[i] += pw(n - 2 * i + 1) - pw(n - 2 * i - 1);
    for (std::size_t i = 1; i <= n; ++i) s.size += s.N[i];
    s.N[0] = pw(m) + 1 - s.size;
    return s;
}

namespace {

WeightDistribution finish(std::uint64_t q, std::uint64_t m, std::uint64_t top, std::vector<BigInt> a) {
    a[0] = 1;
    BigInt rest = big_pow(q, 2 * m);
    for (std::size_t i = 0; i < top; ++i) rest -= a[i];
    a[top] += rest;
    return a;
}

}  // namespace

WeightDistribution poly_k2_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t t1, std::uint64_t t2) {
    if (t1 > t2) std::swap(t1, t2);
    if (t1 < 1 || t1 + t2 > m) throw std::invalid_argument("need t1, t2 >= 1 and t1 + t2 <= m");
    const std::uint64_t n = t1 + t2;
    const BigInt unit = big_pow(q, m) - 1;
    std::vector<BigInt> a(n + 1, 0);
    a[t1] += unit;
    a[t2] += big_pow(q, t2 - t1 + 1) * unit;
    for (std::uint64_t i = 1; i < t1; ++i) a[n - i] += unit * (big_pow(q, n - 2 * i + 1) - big_pow(q, n - 2 * i - 1));
    return finish(q, m, n, std::move(a));
}

WeightDistribution lifted_k2_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t ell_t, std::uint64_t t1,
                                          std::uint64_t t2) {
    const std::uint64_t n = ell_t + t1 + t2;
    if (n > m) throw std::invalid_argument("closed form needs n <= m");
    const BigInt unit = big_pow(q, m) - 1;
    std::vector<BigInt> a(n + 1, 0);
    a[t2] += unit;
    if (t1 >= t2) {
        a[n - t2] += big_pow(q, ell_t + t1 - t2 + 1) * unit;
        for (std::uint64_t i = 1; i < t2; ++i) a[n - i] += unit * (big_pow(q, n - 2 * i + 1) - big_pow(q, n - 2 * i - 1));
    } else {
        a[ell_t + t1] += big_pow(q, ell_t) * unit;
        a[ell_t + t2] += (big_pow(q, ell_t + t2 - t1 + 1) - big_pow(q, ell_t)) * unit;
        for (std::uint64_t i = 1; i < t1; ++i) a[n - i] += unit * (big_pow(q, n - 2 * i + 1) - big_pow(q, n - 2 * i - 1));
    }
    return finish(q, m, n, std::move(a));
}

}  // namespace rankmc
