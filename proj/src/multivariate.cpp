#include "hookforge/multivariate.hpp"

#include <numeric>
#include <stdexcept>

namespace hookforge {

MultiPoly MultiPoly::constant(int vars, const BigInt& c) {
    MultiPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

MultiPoly MultiPoly::linear(int vars, int i, long ci, int j, long cj) {
    if (i < 0 || j < 0 || i >= vars || j >= vars) throw std::out_of_range("variable index out of range");
    MultiPoly p(vars);
    Exponents e(vars, 0);
    e[i] = 1;
    p.add_term(e, BigInt(ci));
    e[i] = 0;
    e[j] = 1;
    p.add_term(e, BigInt(cj));
    return p;
}

BigInt MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    MultiPoly out(vars_);
    for (auto e_c : terms_) {
        Exponents e = e_c.first;
        std::swap(e[i], e[j]);
        out.terms_.emplace(std::move(e), e_c.second);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("variable counts differ");
    MultiPoly out(a.vars_);
    MultiPoly::Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.vars_; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        const BigInt mag = abs(c);
        bool any = false;
        std::string mono;
        for (int k = 0; k < vars_; ++k) {
            if (e[k] == 0) continue;
            if (any) mono += '*';
            mono += "a" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            any = true;
        }
        if (!any) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += mono;
        }
    }
    return s;
}

MultiPoly vandermonde(int n) {
    MultiPoly v = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v = v * MultiPoly::linear(n, i, 1, j, -1);
    return v;
}

}  // namespace hookforge
