#include "hookforge/exact/polynomial.hpp"

#include <sstream>

namespace hookforge {

BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

Polynomial::Polynomial(const BigRational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(unsigned k, const BigRational& coeff) {
    if (coeff == 0) return {};
    std::vector<BigRational> c(k + 1);
    c[k] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

const BigRational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    Polynomial r = *this;
    const BigRational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

BigRational Polynomial::eval(const BigRational& point) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Polynomial Polynomial::reflect() const {
    Polynomial r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    BigRational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c == 0) continue;
        BigRational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (!unit || k == 0) out << mag.get_str();
        if (k > 0) {
            if (!unit) out << '*';
            out << var;
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRational> quo(rem.size() - db);
    const BigRational lead_inv = 1 / bc.back();
    const bool monic = (bc.back() == 1);
    BigRational tmp;
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        BigRational f = monic ? rem[k] : rem[k] * lead_inv;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[j].get_mpq_t());
            rem[k - db + j] -= tmp;
        }
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Polynomial u = a.monic();
    Polynomial v = b.monic();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = divmod(u, v).second.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

}  // namespace hookforge
