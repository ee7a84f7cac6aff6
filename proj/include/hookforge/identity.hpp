#pragma once

// The verification engine. Each verify_* function is a pure function of its
// arguments and returns a VerificationReport; failures carry a witness that
// reproduces them (the shape, n, or sample point, plus both sides of the
// failed equality in canonical form).

#include "hookforge/exact/rational_function.hpp"
#include "hookforge/multivariate.hpp"
#include "hookforge/partitions.hpp"
#include "hookforge/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hookforge {

using ParamValue = std::variant<std::int64_t, std::string>;

struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, ParamValue>> params;
    bool passed = true;
    std::optional<std::string> witness;  // set exactly when !passed
    double millis = 0.0;

    void fail(std::string why) {
        if (passed) {
            passed = false;
            witness = std::move(why);
        }
    }
};

// ---- weight sums ----------------------------------------------------------

/// phi_n = sum_{lambda |- n} f^lambda w(lambda), canonical in q. Results are
/// memoized; safe to call concurrently.
RationalFunction phi_n(int n);

/// The same sum accumulated with generic rational-function addition. Slow;
/// used as an independent route for small n.
RationalFunction phi_n_generic(int n);

// ---- theorems -------------------------------------------------------------

/// phi_n == psi_n.
VerificationReport verify_theorem1prime(int n);

/// exp(t + z t^2/2) against sum_{lambda |- n} prod rho(h(x), z) for every
/// n <= order, together with the z = 0 and z = 1 specializations.
VerificationReport verify_theorem1(int order);

/// phi_{n+1} == w(1) phi_n + n phi_{n-1} (phi_1 == w(1) phi_0 for n = 0).
VerificationReport verify_phi_recursion(int n);

/// rho(n) at z = ((1-q)/(1+q))^2 equals w(n) (1-q)/((1+q) n).
VerificationReport verify_weight_substitution(int n);

// ---- extend/retract -------------------------------------------------------

/// sum_{lambda+} w(lambda+) == w(1) w(lambda) + sum_{lambda-} w(lambda-).
VerificationReport verify_lemma1(const Partition& shape);

enum class CornerKind { outer, inner };

/// The four hook/content relations for adding outer corner k (1..d) or
/// removing inner corner k (1..d-1). Throws std::out_of_range for a bad k.
VerificationReport verify_corner_hooks(const Partition& shape, CornerKind kind, int k);

// ---- content identities ---------------------------------------------------

/// The two-sided content sum equals 1, exactly in q, for integer contents.
/// Throws std::invalid_argument unless |ys| = |xs| - 1 and all values are
/// distinct.
VerificationReport verify_prop2(const std::vector<int>& xs, const std::vector<int>& ys);

/// Substituting a_i = q^{-x_i}, a_{d+i} = -q^{-y_i} into the parity sum
/// reproduces the content sum term by term. Same preconditions as
/// verify_prop2.
VerificationReport verify_prop2_reduction(const std::vector<int>& xs, const std::vector<int>& ys);

/// b_k = prod_{i != k} (a_k + a_i)/(a_k - a_i). Throws std::invalid_argument
/// ("requires distinct values") on coincident or zero entries.
std::vector<BigRational> prop3_terms(const std::vector<BigRational>& a);

/// sum_k b_k is 0 for even n and 1 for odd n.
VerificationReport verify_prop3(const std::vector<BigRational>& a);

/// Partial fractions of prod (t+a_i)/(t-a_i): c_0 = 1, c_k = 2 a_k b_k, and
/// the t = 0 identity (-1)^n = c_0 - sum c_k / a_k.
VerificationReport verify_prop3_residues(const std::vector<BigRational>& a);

/// The cleared-denominator form, expanded symbolically: alternating under
/// adjacent transpositions and equal to (n mod 2) times the Vandermonde
/// product. Throws std::invalid_argument outside 2 <= n <= kAlternatingBound.
VerificationReport verify_prop3_alternating(int n);

inline constexpr int kAlternatingBound = 7;

/// Left side of the cleared-denominator identity as a polynomial in a_1..a_n.
MultiPoly prop3_cleared_lhs(int n);

/// Distinct nonzero rationals p/r with |p| <= 10^6, 1 <= r <= 10^3 and no
/// two summing to zero, drawn from a generator keyed on (seed, n, trial).
std::vector<BigRational> sample_distinct_rationals(int n, std::uint64_t seed, std::uint64_t trial);

// ---- sweeps ---------------------------------------------------------------
// One report per size n, covering every shape or tableau of that size.

VerificationReport sweep_lemma1(int n);
VerificationReport sweep_corner_hooks(int n);
VerificationReport sweep_prop2(int n);
VerificationReport sweep_prop2_reduction(int n);

/// Both composites of the reverse/forward row-insertion pair are identities
/// on SYT(n) x corners and SYT(n-1) x {1..n}, and the first map is injective.
VerificationReport verify_bijection(int n);

/// sum_{P in SYT(n)} #corners(P) == n |SYT(n-1)|.
VerificationReport verify_corner_sum(int n);

/// sum (f^lambda)^2 == n!, sum f^lambda == |Inv(n)|, f^lambda against SYT
/// enumeration (n <= 10) and |Inv(n)| against enumeration (n <= 12).
VerificationReport verify_counting(int n);

/// Parity sum and residue checks over `trials` sampled vectors of length n.
VerificationReport sweep_prop3(int n, int trials, std::uint64_t seed);
VerificationReport sweep_prop3_residues(int n, int trials, std::uint64_t seed);

/// Exponential generating function for involutions at a sampled (u1, u2),
/// plus g_n recursion against enumeration for n <= min(order, 10).
VerificationReport verify_egf(int order, std::uint64_t seed, std::uint64_t trial);

/// Report form of the egf check at a given point.
VerificationReport verify_egf_at(int order, const BigRational& u1, const BigRational& u2);

}  // namespace hookforge
