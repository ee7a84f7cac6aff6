#pragma once

#include "hookforge/exact/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookforge {

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The indeterminate is not stored; each call site knows whether it is
/// working in q, z, t or a_i and passes the name to to_string(). The
/// coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and degree() returns -1 for it.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const BigRational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT
    explicit Polynomial(std::vector<BigRational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    /// x^k
    static Polynomial monomial(unsigned k, const BigRational& coeff = 1);
    /// The indeterminate itself.
    static Polynomial x() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::span<const BigRational> coefficients() const { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    BigRational coeff(std::size_t k) const;
    const BigRational& leading() const;

    Polynomial monic() const;
    BigRational eval(const BigRational& point) const;
    Polynomial pow(unsigned e) const;
    /// p(-x)
    Polynomial reflect() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(std::string_view var = "q") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
/// Throws ArithmeticError("division by zero") when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Division that must leave no remainder; throws ArithmeticError otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor by the Euclidean algorithm over Q.
/// Throws std::invalid_argument when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hookforge
