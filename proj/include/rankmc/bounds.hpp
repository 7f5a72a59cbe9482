#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankmc/q_system.hpp"

namespace rankmc {

enum class Verdict { AttainedLower, Interior, AttainedUpper, Violated, Inapplicable };
std::string to_string(Verdict v);

/// A bound on M(C), both sides on the M scale (not divided by q^m - 1).
struct BoundReport {
    std::string name;
    bool applicable = false;
    BigInt lower = 0;
    BigInt upper = 0;
    std::optional<BigInt> observed;
    Verdict verdict = Verdict::Inapplicable;
    bool refined = false;                    // tightened by a weight-(n-1) codeword
    std::optional<BigInt> proof_tight_lower; // lower + q^{m(k-2)} for the second-weight short bound
    std::string note;

    /// Records M and sets the verdict; lower wins over upper when they coincide.
    BoundReport& observe(const BigInt& m);
};

BoundReport inapplicable(std::string name, std::string note);

struct SubgeometryCensus {
    BigInt alpha;  // hyperplanes meeting PG(k-1,q) in at least one point
    BigInt beta;   // in at least two points
    BigInt gamma;  // in none
    BigInt delta;  // in exactly one
};

/// Hyperplanes of PG(k-1,q^m) by how they meet a canonical subgeometry; 2 <= k <= m.
SubgeometryCensus subgeometry_census(std::uint64_t q, std::uint64_t m, std::uint64_t k);

/// (q^{mk} - 1)/(q^m - 1).
BigInt projective_size(std::uint64_t q, std::uint64_t m, std::uint64_t k);

// k = 2, n <= m.
BoundReport bounds_dim2(std::uint64_t q, std::uint64_t m, std::uint64_t n, bool has_weight_n_minus_1);
BoundReport bounds_dim2_e(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t e);
std::uint64_t recover_n(const BigInt& M, std::uint64_t q, std::uint64_t m, std::uint64_t e);

// k = 2, m < n <= 2m - 1; `hypothesis` is d >= n - m + 1.
BoundReport bounds_dim2_dual(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::optional<std::uint64_t> e = {},
                             bool hypothesis = true);
std::uint64_t recover_n_dual(const BigInt& M, std::uint64_t q, std::uint64_t m, std::uint64_t e);

// k >= 3, k <= n <= m.
BoundReport bounds_k_nlem(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k);
BoundReport bounds_k_nlem_e(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t e);
/// Returns m(k-2) + n.
std::uint64_t recover_k_nlem(std::uint64_t q, std::uint64_t m, std::uint64_t k, std::uint64_t e, const BigInt& M);

// k >= 3, m <= n; `hypothesis` is d_{k-1} >= n - m + 1.
BoundReport bounds_k_mlen(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k,
                          std::optional<std::uint64_t> e = {}, bool hypothesis = true);
/// Returns km - n.
std::uint64_t recover_k_mlen(std::uint64_t q, std::uint64_t m, std::uint64_t k, std::uint64_t e, const BigInt& M);

/// Upper bound on M/(q^m - 1) when the dual system meets a codimension-r
/// subspace in a canonical subgeometry; 1 <= r < k, m <= n.
BigInt bound_subgeom_upper(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t r);
BoundReport bounds_subgeom(std::uint64_t q, std::uint64_t m, std::uint64_t n, std::uint64_t k, std::uint64_t r);

/// Searches r independent codewords v_1 G', ..., v_r G' of `dual` such that
/// W = U' ∩ <v_1..v_r>^perp has dim_{F_q} W = dim_{F_{q^m}} <W> = k - r.
bool check_subgeom_hypothesis(const Code& dual, std::size_t r, std::uint64_t budget = std::uint64_t{1} << 16);

enum class MaxFamily { Poly, Lifted };

struct MaxHypotheses {
    std::vector<std::int64_t> s_values;  // distinct, descending
    bool sum_applicable = false;         // false when some s <= 0
    bool sum_condition = false;          // k <= sum (q^s - 2 q^{s/2}) / s
    BigInt count_lhs = 0;                // mk - k - sum t  (Poly)  or  sum t - k  (Lifted)
    bool count_condition = false;        // count_lhs <= q
    bool shape_condition = false;        // Poly: m <= n, km - n <= m + k.  Lifted: sum t <= t + k
    bool holds() const { return shape_condition && (sum_condition || count_condition); }
};

/// `sub_degree` is the t of F_{q^t} for the lifted family (ignored for Poly).
MaxHypotheses check_max_hypotheses(MaxFamily family, std::uint64_t q, std::uint64_t m, std::uint64_t k,
                                   const std::vector<std::uint64_t>& t, std::uint64_t sub_degree = 0);

/// "premise iff conclusion", or "premise implies conclusion" when not biconditional.
struct CharacterizationCheck {
    std::string name;
    bool premise = false;
    bool conclusion = false;
    bool biconditional = true;
    bool agrees() const { return biconditional ? premise == conclusion : (!premise || conclusion); }
};

struct Classification {
    BigInt M;
    std::uint64_t q = 0, m = 0, n = 0, k = 0, d = 0;
    std::optional<std::uint64_t> e;  // min(m,n) minus the second maximum weight
    bool mrd = false;
    std::vector<BoundReport> reports;
    std::vector<CharacterizationCheck> checks;
    Verdict verdict = Verdict::Inapplicable;  // verdict of the first applicable report
    bool consistent() const;
};

/// Evaluates every bound that applies to C and cross-checks the structural
/// characterisations of the extremal cases.
Classification classify_extremal(const Code& c, std::uint64_t budget = kDefaultBudget);

}  // namespace rankmc
