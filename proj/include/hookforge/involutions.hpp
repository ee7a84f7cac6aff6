#pragma once

#include "hookforge/exact/rational_function.hpp"

#include <string>
#include <vector>

namespace hookforge {

struct CycleStats {
    int fixed_points = 0;  // alpha_1
    int two_cycles = 0;    // alpha_2
};

/// A permutation equal to its own inverse, in one-line notation (1-based).
class Involution {
public:
    Involution() = default;
    /// Throws std::invalid_argument unless images is a permutation of 1..n
    /// with pi(pi(i)) = i.
    explicit Involution(std::vector<int> images);

    const std::vector<int>& images() const { return images_; }
    int size() const { return static_cast<int>(images_.size()); }
    CycleStats stats() const;

    /// "2 1 3"; the empty involution is the empty string.
    std::string to_string() const;

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    std::vector<int> images_;
};

/// All involutions of {1..n}: n is either fixed or swapped with some j < n.
std::vector<Involution> enumerate_involutions(int n);

/// |Inv(n)| from I(n) = I(n-1) + (n-1) I(n-2).
BigInt involution_count(int n);

/// g_n(u1, u2) by g_{n+1} = u1 g_n + n u2 g_{n-1}, g_0 = 1, g_1 = u1.
BigRational g_poly(int n, const BigRational& u1, const BigRational& u2);

/// g_n(u1, u2) as the sum of u1^alpha1 u2^alpha2 over enumerated involutions.
BigRational g_poly_oracle(int n, const BigRational& u1, const BigRational& u2);

/// Compares exp(u1 t + u2 t^2/2) to order N against g_n/n! for all n <= N.
bool verify_involution_egf(int order, const BigRational& u1, const BigRational& u2);

/// Number of involutions of {1..n} with exactly k fixed points, indexed by k.
/// Counted by enumeration when n <= kEnumerationBound and by the closed form
/// C(n,k) (n-k-1)!! beyond.
std::vector<BigInt> fixed_point_distribution(int n);

inline constexpr int kEnumerationBound = 12;

/// psi_n by psi_{n+1} = w(1) psi_n + n psi_{n-1}.
RationalFunction psi_recursive(int n);

/// psi_n = sum over Inv(n) of w(1)^{alpha_1}.
RationalFunction psi_enumerated(int n);

/// psi_n in canonical form. Both routes are computed; throws
/// IdentityViolation if they disagree.
RationalFunction psi_n(int n);

}  // namespace hookforge
