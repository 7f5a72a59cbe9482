#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankmc/field_tower.hpp"

namespace rankmc {

/// Dense matrix over F_q holding F_q labels, row-major.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::uint32_t> values);
    FqMatrix transposed() const;

    static FqMatrix identity(std::size_t n);

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Dense matrix over F_{q^m}, row-major.
class ExtMatrix {
public:
    ExtMatrix() = default;
    ExtMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;

    friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

/// Row-reduces in place to reduced row-echelon form; returns the rank and
/// drops zero rows.
std::size_t rref_in_place(const FieldTower& f, FqMatrix& a);

std::size_t rank_fq(const FieldTower& f, const FqMatrix& a);

/// Rank of rows given as q = 2 bit masks.
std::size_t rank_f2(std::span<const std::uint64_t> rows);

/// Rank over F_q of the n x m expansion matrix whose rows are the default-basis
/// coordinates of the given elements. Bit-packed for q = 2.
std::size_t rank_of_elements(const FieldTower& f, std::span<const Elem> xs);

/// Rank over F_q of the n x (r*m) matrix whose row j concatenates the
/// coordinates of rows[i][j] for i = 0..r-1.
std::size_t rank_of_element_rows(const FieldTower& f, std::span<const Vec> rows);

/// Basis (as rows) of {x : A x = 0}.
FqMatrix right_kernel(const FieldTower& f, const FqMatrix& a);

/// Basis (as rows) of {y : y A = 0}.
FqMatrix left_kernel(const FieldTower& f, const FqMatrix& a);

/// Rank over F_{q^m}.
std::size_t rank_ext(const FieldTower& f, ExtMatrix a);

/// An F_q-subspace of F_q^N in canonical (reduced row-echelon) form.
class FqSubspace {
public:
    FqSubspace() = default;
    explicit FqSubspace(std::size_t ambient_dim) : basis_(0, ambient_dim) {}

    /// Span of the rows of `generators`.
    static FqSubspace span(const FieldTower& f, FqMatrix generators);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }

    bool contains(const FieldTower& f, std::span<const std::uint32_t> v) const;

    friend bool operator==(const FqSubspace&, const FqSubspace&) = default;

private:
    FqMatrix basis_;
};

FqSubspace intersect(const FieldTower& f, const FqSubspace& a, const FqSubspace& b);
FqSubspace sum(const FieldTower& f, const FqSubspace& a, const FqSubspace& b);

/// Gamma(x): row i holds the coordinates of x_i w.r.t. gamma.
FqMatrix expand(const FieldTower& f, std::span<const Elem> x, std::span<const Elem> gamma);
FqMatrix expand(const FieldTower& f, std::span<const Elem> x);  // default basis

/// Column span of Gamma(x) inside F_q^n.
FqSubspace rank_support(const FieldTower& f, std::span<const Elem> x);
FqSubspace rank_support(const FieldTower& f, std::span<const Elem> x, std::span<const Elem> gamma);

/// Coordinates of v in F_q^{km}: block i holds the coordinates of v_i.
std::vector<std::uint32_t> flatten(const FieldTower& f, std::span<const Elem> v);
Vec unflatten(const FieldTower& f, std::span<const std::uint32_t> coords, std::size_t k);

// Projective points of PG(k-1, q^m): nonzero vectors whose first nonzero entry
// is 1. A hyperplane is stored by its defining functional x (the set x^perp).
struct ProjPoint {
    Vec v;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjHyperplane {
    Vec x;
    friend bool operator==(const ProjHyperplane&, const ProjHyperplane&) = default;
};

/// (Q^k - 1)/(Q - 1) with Q = q^m; throws BudgetExceeded above `budget`.
std::uint64_t projective_count(const FieldTower& f, std::size_t k, std::uint64_t budget = kDefaultBudget);

/// Deterministic enumeration order: grouped by the position of the leading 1
/// (leftmost first), trailing coordinates in odometer order (first one fastest).
ProjPoint point_at(const FieldTower& f, std::size_t k, std::uint64_t index);
std::uint64_t point_index(const FieldTower& f, std::span<const Elem> normalized);

std::vector<ProjPoint> enumerate_points(const FieldTower& f, std::size_t k, std::uint64_t budget = kDefaultBudget);
std::vector<ProjHyperplane> enumerate_hyperplanes(const FieldTower& f, std::size_t k,
                                                  std::uint64_t budget = kDefaultBudget);

/// Scales v so its first nonzero entry is 1; nullopt for the zero vector.
std::optional<Vec> normalize(const FieldTower& f, Vec v);

/// Basis of the annihilator {y : y . v = 0} of a normalized nonzero v.
std::vector<Vec> annihilator(const FieldTower& f, std::span<const Elem> v);

Elem dot(const FieldTower& f, std::span<const Elem> a, std::span<const Elem> b);

/// Calls fn(rows) for every r-dimensional F_{q^m}-subspace of F_{q^m}^k, given
/// by its reduced echelon basis; stops early if fn returns false.
template <class Fn>
void for_each_ext_subspace(const FieldTower& f, std::size_t k, std::size_t r, Fn&& fn);

}  // namespace rankmc

#include "rankmc/detail/ext_subspaces.hpp"
