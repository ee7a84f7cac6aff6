#pragma once

// Hook weights as rational functions: w(h) = (1+q^h)/(1-q^h) in q and
// the hook weight rho(n, z) in z.
//
// Every w-product factors over cyclotomic polynomials, since
//   q^h - 1 = prod_{d | h} Phi_d(q)   and   1 + q^h = prod_{d | 2h, d !| h} Phi_d(q).
// CyclotomicProduct keeps that factorization, which makes products of
// weights exact without any gcd, and CyclotomicSum adds such products over a
// common denominator that is reduced by trial division with each Phi_d.

#include "hookforge/exact/rational_function.hpp"
#include "hookforge/partitions.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hookforge {

/// The d-th cyclotomic polynomial. Memoized; safe to call concurrently.
const Polynomial& cyclotomic(int d);

/// sign * prod_d Phi_d(q)^{e_d}, with integer (possibly negative) exponents.
class CyclotomicProduct {
public:
    CyclotomicProduct() = default;

    int sign() const { return sign_; }
    const std::map<int, int>& exponents() const { return exponents_; }

    CyclotomicProduct& operator*=(const CyclotomicProduct& o);
    CyclotomicProduct inverse() const;
    CyclotomicProduct negated() const;

    friend CyclotomicProduct operator*(CyclotomicProduct a, const CyclotomicProduct& b) { return a *= b; }

    /// Canonical rational function; distinct Phi_d are coprime so no gcd is
    /// needed.
    RationalFunction to_rational_function() const;

    void multiply_phi(int d, int e);
    void flip_sign() { sign_ = -sign_; }

private:
    int sign_ = 1;
    std::map<int, int> exponents_;  // zero exponents are erased
};

/// Factored w(h). Throws std::invalid_argument for h = 0.
CyclotomicProduct weight_factored(int h);

/// Factored w(lambda) = prod over cells of w(hook).
CyclotomicProduct weight_lambda_factored(const Partition& shape);

/// Exact sum of rational multiples of cyclotomic products.
class CyclotomicSum {
public:
    void add(const BigRational& coeff, const CyclotomicProduct& term);
    void add(const CyclotomicProduct& term) { add(BigRational(1), term); }
    RationalFunction value() const;

private:
    std::vector<std::pair<BigRational, CyclotomicProduct>> terms_;
};

/// w(h) = (1+q^h)/(1-q^h) in canonical form; w(-h) = -w(h). Throws
/// std::invalid_argument for h = 0.
RationalFunction weight_w(int h);

/// w(lambda) = prod_{x in lambda} w(h(x)), canonical.
RationalFunction weight_lambda(const Partition& shape);

/// The even and odd binomial polynomials of rho: sum_k C(n,2k) z^k and
/// n * sum_k C(n,2k+1) z^k.
std::pair<Polynomial, Polynomial> rho_parts(int n);

/// rho(n, z) canonical in z. Throws std::invalid_argument for n <= 0.
RationalFunction rho(int n);

}  // namespace hookforge
