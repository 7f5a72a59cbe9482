#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankmc/kernels.hpp"
#include "rankmc/rank_code.hpp"

namespace rankmc {

/// An F_q-subspace U of F_{q^m}^k held by an F_q-basis of n vectors.
class System {
public:
    const FieldTower& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t k() const { return g_.rows(); }
    std::size_t n() const { return g_.cols(); }
    const std::vector<Vec>& basis() const { return basis_; }
    /// k x n matrix whose columns are the basis vectors.
    const ExtMatrix& matrix() const { return g_; }
    /// <U>_{F_{q^m}} = F_{q^m}^k.
    bool spans() const { return spans_; }

private:
    friend System make_system(FieldPtr f, std::size_t k, std::vector<Vec> basis);

    FieldPtr field_;
    std::vector<Vec> basis_;
    ExtMatrix g_;
    bool spans_ = false;
};

/// Throws std::invalid_argument if the vectors are F_q-dependent or of the wrong length.
System make_system(FieldPtr f, std::size_t k, std::vector<Vec> basis);

/// F_q-span of the columns of G; the code must be non-degenerate.
System system_of(const Code& c);

/// The code whose generator columns are the basis of U; U must span.
Code code_of(const System& u);

/// U as a subspace of F_q^{km} (coordinates per flatten()).
FqSubspace as_subspace(const System& u);
bool same_subspace(const System& a, const System& b);

/// U = F_q^k inside F_{q^m}^k.
System subgeometry_system(FieldPtr f, std::size_t k);

std::size_t point_weight(const System& u, std::span<const Elem> v);
/// dim_{F_q}(U ∩ x^perp).
std::size_t hyperplane_weight(const System& u, std::span<const Elem> x);

struct PointSpectrum {
    std::vector<std::uint64_t> N;  // N[i] for 1 <= i <= n; N[0] counts points off L_U
    std::uint64_t size = 0;        // |L_U|
    friend bool operator==(const PointSpectrum&, const PointSpectrum&) = default;
};

/// Scans every point; the counting identities of a linear set are checked
/// before returning and a failure throws std::logic_error.
PointSpectrum point_spectrum(const System& u, std::uint64_t budget = kDefaultBudget);

/// Throws std::logic_error unless the spectrum satisfies the linear-set identities.
void check_spectrum(const PointSpectrum& s, std::uint64_t q, std::size_t n, std::size_t k, bool spans);

/// Number of spectra verified by check_spectrum so far in this process.
std::uint64_t spectrum_checks_performed();

bool is_scattered(const System& u, std::uint64_t budget = kDefaultBudget);
bool is_canonical_subgeometry(const System& u, std::uint64_t budget = kDefaultBudget);

/// Orthogonal complement under Tr(sum u_i v_i); dimension km - n. May not span.
System dual_system(const System& u);

/// A code associated with the dual system; throws std::invalid_argument when
/// that system does not span.
Code geometric_dual(const Code& c);

using HyperplaneCensus = kernels::Census;
HyperplaneCensus hyperplane_census(const System& u, std::uint64_t budget = kDefaultBudget);

/// A hyperplane through p meeting L_U in exactly one point. Requires k >= 3
/// (std::invalid_argument otherwise); nullopt when no such hyperplane exists.
std::optional<Vec> find_tangent_hyperplane(const System& u, std::span<const Elem> p,
                                           std::uint64_t budget = kDefaultBudget);

}  // namespace rankmc
