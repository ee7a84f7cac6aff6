#include "hookforge/exact/rational_function.hpp"

namespace hookforge {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ArithmeticError("division by zero");
    if (num.is_zero()) return RationalFunction();
    const Polynomial g = poly_gcd(num, den);
    Polynomial n = g.degree() > 0 ? exact_div(num, g) : num;
    Polynomial d = g.degree() > 0 ? exact_div(den, g) : den;
    if (!d.is_monic()) {
        const BigRational inv = 1 / d.leading();
        n *= inv;
        d *= inv;
    }
    return RationalFunction(std::move(n), std::move(d), 0);
}

RationalFunction RationalFunction::from_reduced(Polynomial num, Polynomial den) {
    if (!den.is_monic()) throw std::invalid_argument("from_reduced: denominator must be monic");
    if (num.is_zero()) return RationalFunction();
    return RationalFunction(std::move(num), std::move(den), 0);
}

BigRational RationalFunction::eval(const BigRational& point) const {
    const BigRational d = den_.eval(point);
    if (d == 0) throw ArithmeticError("pole");
    return num_.eval(point) / d;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    const BigRational inv = 1 / num_.leading();
    return RationalFunction(den_ * inv, num_ * inv, 0);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    const auto k = static_cast<unsigned>(e);
    return RationalFunction(num_.pow(k), den_.pow(k), 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        *this = normalize(num_ + o.num_, den_);
        return *this;
    }
    *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // Cross-cancel first so the final gcd runs on smaller operands.
    if (num_.is_zero() || o.num_.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    const Polynomial g1 = poly_gcd(num_, o.den_);
    const Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Polynomial d = exact_div(den_, g2) * exact_div(o.den_, g1);
    const BigRational inv = 1 / d.leading();
    n *= inv;
    d *= inv;
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    return *this *= o.inverse();
}

RationalFunction& RationalFunction::operator*=(const BigRational& s) {
    if (s == 0) {
        *this = RationalFunction();
    } else {
        num_ *= s;
    }
    return *this;
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

bool cross_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

RationalFunction substitute(const Polynomial& p, const RationalFunction& x) {
    RationalFunction acc;
    const auto c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= x;
        acc += RationalFunction(c[k]);
    }
    return acc;
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& x) {
    return substitute(f.num(), x) / substitute(f.den(), x);
}

}  // namespace hookforge
