#pragma once

#include <cstdint>
#include <random>

#include "rankmc/q_system.hpp"

namespace rankmc {

/// Name recorded in reports for the seeded generator.
inline constexpr const char* kRngName = "mt19937_64/v1";

using Rng = std::mt19937_64;

/// Uniform spanning system of rank n in F_{q^m}^k (rejection sampling).
System random_system(FieldPtr f, std::size_t k, std::size_t n, Rng& rng);

/// Uniform element of GL(n, q), as F_q labels.
FqMatrix random_gl(const FieldTower& f, std::size_t n, Rng& rng);

/// Calls fn(basis) for every r-dimensional subspace of F_q^N, given by its
/// reduced echelon basis (labels); stops early if fn returns false.
template <class Fn>
void for_each_fq_subspace(const FieldTower& f, std::size_t N, std::size_t r, Fn&& fn) {
    if (r > N) return;
    const std::uint32_t q = f.q();
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    for (;;) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        std::vector<bool> is_pivot(N, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = pivots[i] + 1; c < N; ++c) {
                if (!is_pivot[c]) free_slots.emplace_back(i, c);
            }
        }
        FqMatrix a(r, N);
        for (std::size_t i = 0; i < r; ++i) a(i, pivots[i]) = 1;
        std::vector<std::uint32_t> digits(free_slots.size(), 0);
        for (;;) {
            if (!fn(std::as_const(a))) return;
            std::size_t j = 0;
            for (; j < digits.size(); ++j) {
                auto [ri, ci] = free_slots[j];
                if (++digits[j] < q) {
                    a(ri, ci) = digits[j];
                    break;
                }
                digits[j] = 0;
                a(ri, ci) = 0;
            }
            if (j == digits.size()) break;
        }
        std::size_t i = r;
        while (i > 0 && pivots[i - 1] == N - r + (i - 1)) --i;
        if (i == 0) return;
        ++pivots[i - 1];
        for (std::size_t t = i; t < r; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

/// System whose F_q-basis is given by the rows of `coords` (flattened, km columns).
System system_from_coords(FieldPtr f, std::size_t k, const FqMatrix& coords);

}  // namespace rankmc
