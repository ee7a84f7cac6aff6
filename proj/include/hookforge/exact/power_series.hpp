#pragma once

#include "hookforge/exact/rational_function.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hookforge {

/// Coefficient-ring hooks for PowerSeries. Each ring supplies a zero test;
/// construction from BigRational and scaling by BigRational come from the
/// ring types themselves.
inline bool ring_is_zero(const BigRational& v) { return v == 0; }
inline bool ring_is_zero(const Polynomial& v) { return v.is_zero(); }
inline bool ring_is_zero(const RationalFunction& v) { return v.is_zero(); }

/// Power series in t truncated after t^order. Coefficients of t^0..t^order
/// are kept; products discard everything above the truncation order.
template <class Ring>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Ring(BigRational(0))) {}

    PowerSeries(std::size_t order, std::vector<Ring> coeffs) : PowerSeries(order) {
        if (coeffs.size() > order + 1) throw std::invalid_argument("more coefficients than the truncation order allows");
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Ring& operator[](std::size_t k) const { return coeffs_.at(k); }
    Ring& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Ring>& coefficients() const { return coeffs_; }

    PowerSeries& operator+=(const PowerSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }

    PowerSeries& operator*=(const BigRational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator*(PowerSeries a, const BigRational& s) { return a *= s; }

    friend PowerSeries operator-(PowerSeries a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check_order(b);
        const std::size_t n = a.order();
        PowerSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (ring_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (ring_is_zero(b.coeffs_[j])) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check_order(const PowerSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("power series truncation orders differ");
    }
    std::vector<Ring> coeffs_;
};

/// exp(f) = sum_{k=0}^{N} f^k / k!, truncated at the order of f. The k!
/// division happens in exact rationals one factor at a time.
template <class Ring>
PowerSeries<Ring> series_exp(const PowerSeries<Ring>& f) {
    if (!ring_is_zero(f[0])) throw ArithmeticError("exp requires zero constant term");
    const std::size_t n = f.order();
    PowerSeries<Ring> result(n);
    result[0] = Ring(BigRational(1));
    PowerSeries<Ring> term = result;
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * f;
        term *= make_rational(1, static_cast<long>(k));
        result += term;
    }
    return result;
}

}  // namespace hookforge
