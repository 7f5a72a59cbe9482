#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankmc/q_system.hpp"

namespace rankmc {

/// Block-diagonal code with rows (1, lambda, ..., lambda^{t_i - 1}). The t
/// sequence is sorted ascending; each t_i must lie in [1, m - 1] and lambda
/// must generate F_{q^m} over F_q.
Code poly_code(FieldPtr f, Elem lambda, std::vector<std::uint64_t> t);
Code poly_code(FieldPtr f, std::vector<std::uint64_t> t);  // lambda = find_generator()

struct LiftedSpec {
    std::uint64_t sub_degree = 1;        // t, with F_{q^t} <= F_{q^m}
    std::uint64_t ell = 1;               // F_{q^t}-dimension of S
    std::vector<std::uint64_t> t;        // t_1, ..., t_k (not reordered)
    std::optional<Elem> mu;              // generator of F_{q^t}; default: least one
    std::optional<Vec> s_basis;          // F_q-basis of S; default: g^i mu^j, 1 <= i <= ell
};

/// Code whose first row is (c_1..c_{ell t}, 1, mu, ..., mu^{t_1-1}, 0...) and
/// whose other rows are blocks (1, mu, ..., mu^{t_i-1}).
Code lifted_poly_code(FieldPtr f, const LiftedSpec& spec);

/// The F_q-basis of S used by lifted_poly_code (validated).
Vec lifted_s_basis(const FieldTower& f, const LiftedSpec& spec);

/// Rows (g_j^{q^i}) with g_j the first n default basis elements; k <= n <= m.
Code gabidulin(FieldPtr f, std::size_t n, std::size_t k);

/// {(x, x^q, a) : x in F_{q^m}, a in F_q} inside F_{q^m}^3.
System redei_scattered_system(FieldPtr f);

/// The [2m-1, 3] code of the dual of the system above.
Code redei_code(FieldPtr f);

/// Closed-form point spectrum of <1..lambda^{t1-1}> x <1..lambda^{t2-1}> in
/// PG(1, q^m); 1 <= t1 <= t2, t1 + t2 <= m. N[0] counts points off the set.
PointSpectrum vdv_spectrum(std::uint64_t q, std::uint64_t m, std::uint64_t t1, std::uint64_t t2);

/// Closed-form weight distribution of poly_code with k = 2 and t1 + t2 <= m.
WeightDistribution poly_k2_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t t1, std::uint64_t t2);

/// Closed-form weight distribution of lifted_poly_code with k = 2 and n <= m.
WeightDistribution lifted_k2_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t ell_t, std::uint64_t t1,
                                          std::uint64_t t2);

}  // namespace rankmc
