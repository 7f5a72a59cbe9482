#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankmc/bigint.hpp"

namespace rankmc {

/// Raised when an exhaustive computation would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest field order accepted by make_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Default cap on the number of items any brute-force scan may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// An element of F_{q^m}: the base-p integer whose digits (least significant
/// first) are the coefficients of the element in the power basis 1, z, z^2, ...
struct Elem {
    std::uint32_t v = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t value) : v(value) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

using Vec = std::vector<Elem>;

struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t h = 1;
    std::uint32_t m = 1;

    std::uint32_t q() const;
    std::uint32_t order() const;  // q^m
    std::string to_string() const;  // "p^h:m"
    static FieldParams parse(const std::string& spec);

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// The tower F_p <= F_q <= F_{q^m}.
///
/// F_q is realised as the fixed field of x -> x^q inside F_{q^m}. Its elements
/// carry a second name, the *label*: the rank of the element among the members
/// of F_q in index order (label 0 is zero, label 1 is one). Linear algebra over
/// F_q works on labels; `fq_*` arithmetic maps them through the big field.
///
/// Immutable after construction; every member function is thread-safe.
class FieldTower {
public:
    static std::shared_ptr<const FieldTower> make(std::uint32_t p, std::uint32_t h, std::uint32_t m);
    static std::shared_ptr<const FieldTower> make(const FieldParams& params);

    const FieldParams& params() const { return params_; }
    std::uint32_t p() const { return params_.p; }
    std::uint32_t h() const { return params_.h; }
    std::uint32_t m() const { return params_.m; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t degree() const { return degree_; }  // h*m over F_p

    /// Coefficients of the modulus over F_p, constant term first, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem z() const;  // class of the indeterminate

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, q_); }  // x -> x^q

    /// Tr_{q^m/q}(a) = sum_{i<m} a^{q^i}; lies in F_q.
    Elem trace(Elem a) const;

    bool in_subfield(Elem a) const { return label_of_[a.v] >= 0; }

    /// Degree of a over F_q: least j >= 1 with a^{q^j} = a.
    std::uint32_t degree_over_fq(Elem a) const;

    /// Least nonzero element (index order) with F_q(lambda) = F_{q^m}.
    Elem find_generator() const { return generator_; }

    /// Least nonzero element generating the intermediate field F_{q^t}, t | m.
    Elem find_subfield_generator(std::uint32_t t) const;

    // F_q labels.
    std::uint32_t label(Elem a) const;
    Elem from_label(std::uint32_t label) const { return Elem{sub_elems_[label]}; }
    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_neg(std::uint32_t a) const;
    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_inv(std::uint32_t a) const;

    /// Default F_q-basis (1, g, ..., g^{m-1}) with g = find_generator().
    const Vec& default_basis() const { return basis_; }

    /// Coordinates of a w.r.t. the default basis, packed base q (coordinate j
    /// is digit j). For q = 2 this is a bit mask.
    std::uint32_t packed_coords(Elem a) const { return coords_[a.v]; }
    void coords(Elem a, std::span<std::uint32_t> out) const;
    Elem from_coords(std::span<const std::uint32_t> labels) const;

    std::string format(Elem a) const;  // e.g. "1+z+z^3"
    Elem parse(const std::string& literal) const;

private:
    FieldTower() = default;
    void build();

    Elem add_digits(Elem a, Elem b, bool subtract) const;

    FieldParams params_;
    std::uint32_t q_ = 0;
    std::uint32_t order_ = 0;
    std::uint32_t degree_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // length 2(order-1)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> sub_elems_;
    std::vector<std::int32_t> label_of_;
    std::vector<std::uint32_t> coords_;
    std::vector<std::uint32_t> digit_pow_;
    Vec basis_;
    Elem generator_;
};

using FieldPtr = std::shared_ptr<const FieldTower>;

/// Gaussian binomial [s choose t]_q; 0 when s < 0, t < 0 or t > s.
BigInt q_binomial(int s, int t, std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace rankmc
