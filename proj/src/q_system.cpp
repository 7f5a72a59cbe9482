#include "rankmc/q_system.hpp"

#include <atomic>
#include <stdexcept>

namespace rankmc {

System make_system(FieldPtr f, std::size_t k, std::vector<Vec> basis) {
    if (!f) throw std::invalid_argument("missing field");
    if (k == 0) throw std::invalid_argument("system needs k >= 1");
    for (const Vec& v : basis) {
        if (v.size() != k) throw std::invalid_argument("basis vector length must equal k");
        for (Elem e : v) {
            if (e.v >= f->order()) throw std::invalid_argument("vector entry outside the field");
        }
    }
    FqMatrix flat(0, k * f->m());
    for (const Vec& v : basis) flat.append_row(flatten(*f, v));
    if (rank_fq(*f, flat) != basis.size()) throw std::invalid_argument("system vectors are F_q-dependent");

    System s;
    s.g_ = ExtMatrix(k, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) s.g_(i, j) = basis[j][i];
    }
    s.spans_ = rank_ext(*f, s.g_) == k;
    s.field_ = std::move(f);
    s.basis_ = std::move(basis);
    return s;
}

System system_of(const Code& c) {
    if (!is_nondegenerate(c)) throw std::invalid_argument("code is degenerate");
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < c.n(); ++j) cols.push_back(c.generator().column(j));
    return make_system(c.field_ptr(), c.k(), std::move(cols));
}

Code code_of(const System& u) {
    if (!u.spans()) throw std::invalid_argument("system does not span F_{q^m}^k");
    return make_code(u.field_ptr(), u.matrix());
}

FqSubspace as_subspace(const System& u) {
    FqMatrix flat(0, u.k() * u.field().m());
    for (const Vec& v : u.basis()) flat.append_row(flatten(u.field(), v));
    return FqSubspace::span(u.field(), std::move(flat));
}

bool same_subspace(const System& a, const System& b) {
    return a.field().params() == b.field().params() && a.k() == b.k() && as_subspace(a) == as_subspace(b);
}

System subgeometry_system(FieldPtr f, std::size_t k) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < k; ++i) {
        Vec e(k, f->zero());
        e[i] = f->one();
        basis.push_back(std::move(e));
    }
    return make_system(std::move(f), k, std::move(basis));
}

std::size_t point_weight(const System& u, std::span<const Elem> v) {
    if (v.size() != u.k()) throw std::invalid_argument("point has the wrong length");
    return kernels::intersection_dim(u.field(), u.matrix(), annihilator(u.field(), v));
}

std::size_t hyperplane_weight(const System& u, std::span<const Elem> x) {
    if (x.size() != u.k()) throw std::invalid_argument("hyperplane has the wrong length");
    return u.n() - rank_of_elements(u.field(), kernels::encode(u.field(), u.matrix(), x));
}

namespace {
std::atomic<std::uint64_t> g_spectrum_checks{0};
}

void check_spectrum(const PointSpectrum& s, std::uint64_t q, std::size_t n, std::size_t k, bool spans) {
    BigInt size = 0, weighted = 0;
    for (std::size_t i = 1; i < s.N.size(); ++i) {
        size += s.N[i];
        weighted += BigInt(s.N[i]) * gauss_sum(q, i);
    }
    const BigInt full = gauss_sum(q, n);
    if (size != s.size) throw std::logic_error("point counts do not add up to |L_U|");
    if (weighted != full) throw std::logic_error("weighted point count differs from (q^n-1)/(q-1)");
    if (size > full) throw std::logic_error("|L_U| exceeds (q^n-1)/(q-1)");
    if (size != 0 && size % q != 1 % q) throw std::logic_error("|L_U| is not 1 mod q");
    if (spans && size < gauss_sum(q, k)) throw std::logic_error("spanning linear set smaller than PG(k-1,q)");
    ++g_spectrum_checks;
}

std::uint64_t spectrum_checks_performed() { return g_spectrum_checks.load(); }

PointSpectrum point_spectrum(const System& u, std::uint64_t budget) {
    PointSpectrum s;
    s.N = kernels::point_weights(u.field(), u.matrix(), budget);
    for (std::size_t i = 1; i < s.N.size(); ++i) s.size += s.N[i];
    check_spectrum(s, u.field().q(), u.n(), u.k(), u.spans());
    return s;
}

bool is_scattered(const System& u, std::uint64_t budget) {
    const PointSpectrum s = point_spectrum(u, budget);
    for (std::size_t i = 2; i < s.N.size(); ++i) {
        if (s.N[i]) return false;
    }
    if (2 * u.n() > u.field().m() * u.k()) throw std::logic_error("scattered system above rank mk/2");
    return true;
}

bool is_canonical_subgeometry(const System& u, std::uint64_t budget) {
    return u.n() == u.k() && u.spans() && is_scattered(u, budget);
}

System dual_system(const System& u) {
    const FieldTower& f = u.field();
    const std::size_t k = u.k(), m = f.m();
    const Vec& gamma = f.default_basis();
    FqMatrix gram(u.n(), k * m);
    for (std::size_t j = 0; j < u.n(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t l = 0; l < m; ++l) gram(j, i * m + l) = f.label(f.trace(f.mul(u.basis()[j][i], gamma[l])));
        }
    }
    const FqMatrix ker = right_kernel(f, gram);
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(unflatten(f, ker.row(r), k));
    return make_system(u.field_ptr(), k, std::move(basis));
}

Code geometric_dual(const Code& c) {
    const System d = dual_system(system_of(c));
    if (!d.spans()) throw std::invalid_argument("geometric dual undefined: the dual system does not span");
    return code_of(d);
}

HyperplaneCensus hyperplane_census(const System& u, std::uint64_t budget) {
    return kernels::hyperplane_census(u.field(), u.matrix(), budget);
}

std::optional<Vec> find_tangent_hyperplane(const System& u, std::span<const Elem> p, std::uint64_t budget) {
    const FieldTower& f = u.field();
    if (u.k() < 3) throw std::invalid_argument("tangent hyperplane search needs k >= 3");
    if (p.size() != u.k()) throw std::invalid_argument("point has the wrong length");
    const std::uint64_t count = projective_count(f, u.k(), budget);
    for (std::uint64_t i = 0; i < count; ++i) {
        ProjPoint x = point_at(f, u.k(), i);
        if (!dot(f, x.v, p).is_zero()) continue;
        if (kernels::hyperplane_meet_class(f, u.matrix(), x.v) == 1) return std::move(x.v);
    }
    return std::nullopt;
}

}  // namespace rankmc
