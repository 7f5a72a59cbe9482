#pragma once

#include <cstdint>
#include <vector>

#include "rankmc/fq_linear.hpp"

// Exhaustive scans behind the code and system invariants. Each scan takes a
// k x n matrix G over F_{q^m}; its columns are an F_q-basis of the system U.
// The OpenMP versions walk projective points; the *_serial versions are
// independent brute-force references used by the tests and the benchmark.
namespace rankmc::kernels {

struct Census {
    std::uint64_t t0 = 0;
    std::uint64_t t1 = 0;
    std::uint64_t ts = 0;
    friend bool operator==(const Census&, const Census&) = default;
};

/// Codeword count per rank weight, index 0..min(m,n).
std::vector<std::uint64_t> weight_counts(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget = kDefaultBudget);
std::vector<std::uint64_t> weight_counts_serial(const FieldTower& f, const ExtMatrix& g,
                                                std::uint64_t budget = kDefaultBudget);

/// Point count per weight dim(U ∩ <P>), index 0..n (index 0: points off L_U).
std::vector<std::uint64_t> point_weights(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget = kDefaultBudget);
std::vector<std::uint64_t> point_weights_serial(const FieldTower& f, const ExtMatrix& g,
                                                std::uint64_t budget = kDefaultBudget);

/// Hyperplanes meeting L_U in 0, 1 and at least 2 points.
Census hyperplane_census(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget = kDefaultBudget);
Census hyperplane_census_serial(const FieldTower& f, const ExtMatrix& g, std::uint64_t budget = kDefaultBudget);

// Shared helpers.

/// x G for a row vector x.
Vec encode(const FieldTower& f, const ExtMatrix& g, std::span<const Elem> x);

/// dim_{F_q}(U ∩ W) where W is cut out by the given functionals.
std::size_t intersection_dim(const FieldTower& f, const ExtMatrix& g, const std::vector<Vec>& functionals);

/// Number of points of L_U on x^perp (0, 1, or 2 meaning "at least two").
int hyperplane_meet_class(const FieldTower& f, const ExtMatrix& g, std::span<const Elem> x);

}  // namespace rankmc::kernels

namespace rankmc::kernels {

/// F_q-basis of U ∩ W, W cut out by the functionals, as vectors of F_{q^m}^k.
std::vector<Vec> intersection_basis(const FieldTower& f, const ExtMatrix& g, const std::vector<Vec>& functionals);

}  // namespace rankmc::kernels
