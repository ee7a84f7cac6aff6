#include "hookforge/weights.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hookforge {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Integer polynomials for the hot loop of CyclotomicSum; mpz avoids the
// per-operation gcd that mpq arithmetic pays.
using IntPoly = std::vector<BigInt>;

struct SparseFactor {
    std::vector<std::pair<std::size_t, long>> terms;  // (degree, coefficient)
    std::size_t degree = 0;
};

const SparseFactor& sparse_cyclotomic(int d);

void multiply_in_place(IntPoly& p, const SparseFactor& f) {
    IntPoly out(p.size() + f.degree);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (const auto& [k, c] : f.terms) {
            if (c > 0)
                mpz_addmul_ui(out[i + k].get_mpz_t(), p[i].get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_submul_ui(out[i + k].get_mpz_t(), p[i].get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
    p = std::move(out);
}

// Divides by a monic factor; returns false (leaving p untouched) when the
// division is not exact.
bool try_divide(IntPoly& p, const SparseFactor& f) {
    if (p.size() <= f.degree) return false;
    IntPoly rem = p;
    IntPoly quo(p.size() - f.degree);
    for (std::size_t k = rem.size(); k-- > f.degree;) {
        if (rem[k] == 0) continue;
        const BigInt lead = rem[k];
        quo[k - f.degree] = lead;
        for (const auto& [j, c] : f.terms) {
            BigInt& slot = rem[k - f.degree + j];
            if (c > 0)
                mpz_submul_ui(slot.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_addmul_ui(slot.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
    for (std::size_t k = 0; k < f.degree; ++k)
        if (rem[k] != 0) return false;
    p = std::move(quo);
    return true;
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

// Node-based maps keep references stable while other threads insert.
std::unordered_map<int, Polynomial>& cyclotomic_cache() {
    static std::unordered_map<int, Polynomial> cache;
    return cache;
}

std::unordered_map<int, SparseFactor>& sparse_cache() {
    static std::unordered_map<int, SparseFactor> cache;
    return cache;
}

std::unordered_map<int, CyclotomicProduct>& weight_cache() {
    static std::unordered_map<int, CyclotomicProduct> cache;
    return cache;
}

Polynomial compute_cyclotomic(int d) {
    // q^d - 1 divided by Phi_e for every proper divisor e.
    Polynomial p = Polynomial::monomial(static_cast<unsigned>(d)) - Polynomial(1);
    for (int e : divisors(d))
        if (e != d) p = exact_div(p, cyclotomic(e));
    return p;
}

const SparseFactor& sparse_cyclotomic(int d) {
    {
        std::lock_guard lock(cache_mutex());
        auto it = sparse_cache().find(d);
        if (it != sparse_cache().end()) return it->second;
    }
    const Polynomial& phi = cyclotomic(d);
    SparseFactor f;
    f.degree = static_cast<std::size_t>(phi.degree());
    const auto c = phi.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) f.terms.emplace_back(k, c[k].get_num().get_si());
    std::lock_guard lock(cache_mutex());
    return sparse_cache().try_emplace(d, std::move(f)).first->second;
}

}  // namespace

const Polynomial& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    {
        std::lock_guard lock(cache_mutex());
        auto it = cyclotomic_cache().find(d);
        if (it != cyclotomic_cache().end()) return it->second;
    }
    Polynomial p = compute_cyclotomic(d);
    std::lock_guard lock(cache_mutex());
    return cyclotomic_cache().try_emplace(d, std::move(p)).first->second;
}

void CyclotomicProduct::multiply_phi(int d, int e) {
    if (e == 0) return;
    auto [it, inserted] = exponents_.try_emplace(d, e);
    if (!inserted && (it->second += e) == 0) exponents_.erase(it);
}

CyclotomicProduct& CyclotomicProduct::operator*=(const CyclotomicProduct& o) {
    sign_ *= o.sign_;
    for (const auto& [d, e] : o.exponents_) multiply_phi(d, e);
    return *this;
}

CyclotomicProduct CyclotomicProduct::inverse() const {
    CyclotomicProduct r = *this;
    for (auto& [d, e] : r.exponents_) e = -e;
    return r;
}

CyclotomicProduct CyclotomicProduct::negated() const {
    CyclotomicProduct r = *this;
    r.sign_ = -r.sign_;
    return r;
}

RationalFunction CyclotomicProduct::to_rational_function() const {
    Polynomial num(sign_);
    Polynomial den(1);
    for (const auto& [d, e] : exponents_) {
        if (e > 0)
            num *= cyclotomic(d).pow(static_cast<unsigned>(e));
        else
            den *= cyclotomic(d).pow(static_cast<unsigned>(-e));
    }
    return RationalFunction::from_reduced(std::move(num), std::move(den));
}

CyclotomicProduct weight_factored(int h) {
    if (h == 0) throw std::invalid_argument("w(0) is undefined");
    const int a = h < 0 ? -h : h;
    {
        std::lock_guard lock(cache_mutex());
        auto it = weight_cache().find(a);
        if (it != weight_cache().end()) return h < 0 ? it->second.negated() : it->second;
    }
    // (1+q^a)/(1-q^a) = -(1+q^a)/(q^a-1)
    CyclotomicProduct w;
    w.flip_sign();
    for (int d : divisors(2 * a))
        if (a % d != 0) w.multiply_phi(d, 1);
    for (int d : divisors(a)) w.multiply_phi(d, -1);
    {
        std::lock_guard lock(cache_mutex());
        weight_cache().try_emplace(a, w);
    }
    return h < 0 ? w.negated() : w;
}

CyclotomicProduct weight_lambda_factored(const Partition& shape) {
    CyclotomicProduct w;
    for (int h : hook_lengths(shape)) w *= weight_factored(h);
    return w;
}

void CyclotomicSum::add(const BigRational& coeff, const CyclotomicProduct& term) {
    if (coeff == 0) return;
    terms_.emplace_back(coeff, term);
}

RationalFunction CyclotomicSum::value() const {
    if (terms_.empty()) return RationalFunction();
    // Common denominator: the largest negative exponent of each Phi_d, and
    // the lcm of the coefficient denominators.
    std::map<int, int> den_exp;
    BigInt coeff_den = 1;
    for (const auto& [coeff, term] : terms_) {
        for (const auto& [d, e] : term.exponents())
            if (e < 0) den_exp[d] = std::max(den_exp[d], -e);
        mpz_lcm(coeff_den.get_mpz_t(), coeff_den.get_mpz_t(), coeff.get_den_mpz_t());
    }

    IntPoly total;
    for (const auto& [coeff, term] : terms_) {
        BigInt scale = coeff.get_num() * (coeff_den / coeff.get_den()) * term.sign();
        IntPoly p{scale};
        std::map<int, int> exps = den_exp;
        for (const auto& [d, e] : term.exponents()) exps[d] += e;
        for (const auto& [d, e] : exps)
            for (int k = 0; k < e; ++k) multiply_in_place(p, sparse_cyclotomic(d));
        if (p.size() > total.size()) total.resize(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) total[k] += p[k];
    }
    trim(total);
    if (total.empty()) return RationalFunction();

    for (auto& [d, e] : den_exp) {
        const SparseFactor& f = sparse_cyclotomic(d);
        while (e > 0 && try_divide(total, f)) {
            --e;
            trim(total);
        }
    }

    std::vector<BigRational> coeffs;
    coeffs.reserve(total.size());
    for (auto& c : total) coeffs.push_back(make_rational(c, coeff_den));
    Polynomial den(1);
    for (const auto& [d, e] : den_exp)
        if (e > 0) den *= cyclotomic(d).pow(static_cast<unsigned>(e));
    return RationalFunction::from_reduced(Polynomial(std::move(coeffs)), std::move(den));
}

RationalFunction weight_w(int h) { return weight_factored(h).to_rational_function(); }

RationalFunction weight_lambda(const Partition& shape) {
    return weight_lambda_factored(shape).to_rational_function();
}

std::pair<Polynomial, Polynomial> rho_parts(int n) {
    if (n <= 0) throw std::invalid_argument("rho(n) requires n >= 1");
    std::vector<BigRational> even;
    std::vector<BigRational> odd;
    const auto un = static_cast<unsigned long>(n);
    for (unsigned long k = 0; 2 * k <= un; ++k) even.emplace_back(binomial(un, 2 * k));
    for (unsigned long k = 0; 2 * k + 1 <= un; ++k) odd.emplace_back(binomial(un, 2 * k + 1) * n);
    return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

RationalFunction rho(int n) {
    auto [num, den] = rho_parts(n);
    return RationalFunction::normalize(num, den);
}

}  // namespace hookforge
