#pragma once

#include "hookforge/exact/polynomial.hpp"

#include <string>
#include <string_view>

namespace hookforge {

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator monic. Two equal functions therefore always have
/// identical representations and operator== is a plain field comparison.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT

    /// Reduces num/den to canonical form. Throws ArithmeticError("division
    /// by zero") when den is zero.
    static RationalFunction normalize(const Polynomial& num, const Polynomial& den);

    /// Wraps a pair the caller already knows to be coprime with a monic
    /// denominator. Throws std::invalid_argument if den is not monic; the
    /// coprimality is the caller's responsibility.
    static RationalFunction from_reduced(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Exact value at a rational point; throws ArithmeticError("pole") when
    /// the denominator vanishes there.
    BigRational eval(const BigRational& point) const;

    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction& operator*=(const BigRational& s);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator*(RationalFunction a, const BigRational& s) { return a *= s; }
    friend RationalFunction operator*(const BigRational& s, RationalFunction a) { return a *= s; }
    friend RationalFunction operator-(RationalFunction a) {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "q") const;

private:
    RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

/// Equality decided by cross-multiplication, independent of canonical form.
bool cross_equal(const RationalFunction& a, const RationalFunction& b);

/// p(x) for a rational function x.
RationalFunction substitute(const Polynomial& p, const RationalFunction& x);

/// f(x): numerator and denominator of f composed with x.
RationalFunction compose(const RationalFunction& f, const RationalFunction& x);

}  // namespace hookforge
