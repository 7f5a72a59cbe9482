#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "rankmc/fq_linear.hpp"

namespace rankmc {

/// A_0, ..., A_{min(m,n)}.
using WeightDistribution = std::vector<BigInt>;

/// An F_{q^m}-linear rank-metric code given by a full-rank k x n generator
/// matrix. Immutable; exhaustive results are cached on first use and shared
/// between copies.
class Code {
public:
    const FieldTower& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const ExtMatrix& generator() const { return g_; }
    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }
    std::size_t max_weight() const { return std::min<std::size_t>(field_->m(), n()); }

    Vec encode(std::span<const Elem> x) const;

private:
    friend Code make_code(FieldPtr f, ExtMatrix g);
    friend const WeightDistribution& weight_distribution(const Code& c, std::uint64_t budget);

    struct Cache;
    Code(FieldPtr f, ExtMatrix g);

    FieldPtr field_;
    ExtMatrix g_;
    std::shared_ptr<Cache> cache_;
};

/// Throws std::invalid_argument unless g has F_{q^m}-rank equal to its row count.
Code make_code(FieldPtr f, ExtMatrix g);

/// Columns of G independent over F_q.
bool is_nondegenerate(const Code& c);

std::size_t weight(const FieldTower& f, std::span<const Elem> v);

const WeightDistribution& weight_distribution(const Code& c, std::uint64_t budget = kDefaultBudget);

/// M(C): number of codewords of weight min(m, n).
BigInt max_weight_count(const Code& c, std::uint64_t budget = kDefaultBudget);

std::size_t min_distance(const Code& c, std::uint64_t budget = kDefaultBudget);

/// Largest weight below min(m, n) carried by some codeword, if any.
std::optional<std::size_t> second_max_weight(const Code& c, std::uint64_t budget = kDefaultBudget);

bool is_mrd(const Code& c, std::uint64_t budget = kDefaultBudget);

/// Singleton equality mk = max(m,n)(min(m,n) - d + 1).
bool mrd_parameters(std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// Closed-form distribution of any MRD code with these parameters.
WeightDistribution mrd_weight_distribution(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                                           std::uint64_t d);

/// d_r: least F_q-support dimension of an r-dimensional subcode.
std::size_t generalized_weight(const Code& c, std::size_t r, std::uint64_t budget = std::uint64_t{1} << 16);

/// The [mk, k] code whose columns are the F_q-basis gamma_l e_i of F_{q^m}^k.
Code simplex_code(FieldPtr f, std::size_t k);

/// G A for an n x n matrix A over F_q.
Code right_multiply(const Code& c, const FqMatrix& a);

}  // namespace rankmc
