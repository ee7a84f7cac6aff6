#include "hookforge/involutions.hpp"

#include "hookforge/exact/power_series.hpp"
#include "hookforge/weights.hpp"

#include <functional>
#include <stdexcept>

namespace hookforge {

Involution::Involution(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        const int j = images_[i - 1];
        if (j < 1 || j > n || images_[j - 1] != i) throw std::invalid_argument("not an involution");
    }
}

CycleStats Involution::stats() const {
    CycleStats s;
    for (int i = 1; i <= size(); ++i) {
        if (images_[i - 1] == i)
            ++s.fixed_points;
        else if (images_[i - 1] > i)
            ++s.two_cycles;
    }
    return s;
}

std::string Involution::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images_[i]);
    }
    return s;
}

std::vector<Involution> enumerate_involutions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_involutions: n must be nonnegative");
    std::vector<Involution> out;
    std::vector<int> img(n, 0);
    // Decide the largest undecided point first: fixed, or paired with a
    // smaller undecided point.
    std::function<void(int)> rec = [&](int top) {
        while (top >= 1 && img[top - 1] != 0) --top;
        if (top == 0) {
            out.emplace_back(img);
            return;
        }
        img[top - 1] = top;
        rec(top - 1);
        for (int j = 1; j < top; ++j) {
            if (img[j - 1] != 0) continue;
            img[top - 1] = j;
            img[j - 1] = top;
            rec(top - 1);
            img[j - 1] = 0;
        }
        img[top - 1] = 0;
    };
    rec(n);
    return out;
}

BigInt involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution_count: n must be nonnegative");
    BigInt prev = 1, cur = 1;  // I(0), I(1)
    if (n == 0) return prev;
    for (int m = 2; m <= n; ++m) {
        BigInt next = cur + (m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigRational g_poly(int n, const BigRational& u1, const BigRational& u2) {
    if (n < 0) throw std::invalid_argument("g_poly: n must be nonnegative");
    BigRational prev = 1, cur = u1;
    if (n == 0) return prev;
    for (int m = 1; m < n; ++m) {
        BigRational next = u1 * cur + m * u2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

BigRational power(const BigRational& base, int e) {
    BigRational r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

BigRational g_poly_oracle(int n, const BigRational& u1, const BigRational& u2) {
    BigRational sum = 0;
    for (const Involution& pi : enumerate_involutions(n)) {
        const CycleStats s = pi.stats();
        sum += power(u1, s.fixed_points) * power(u2, s.two_cycles);
    }
    return sum;
}

bool verify_involution_egf(int order, const BigRational& u1, const BigRational& u2) {
    if (order < 0) throw std::invalid_argument("verify_involution_egf: order must be nonnegative");
    const auto n = static_cast<std::size_t>(order);
    PowerSeries<BigRational> f(n);
    if (n >= 1) f[1] = u1;
    if (n >= 2) f[2] = u2 / 2;
    const auto e = series_exp(f);
    for (int k = 0; k <= order; ++k) {
        const BigRational expected = g_poly(k, u1, u2) / BigRational(factorial(static_cast<unsigned long>(k)));
        if (e[static_cast<std::size_t>(k)] != expected) return false;
    }
    return true;
}

std::vector<BigInt> fixed_point_distribution(int n) {
    if (n < 0) throw std::invalid_argument("fixed_point_distribution: n must be nonnegative");
    std::vector<BigInt> counts(n + 1, 0);
    if (n <= kEnumerationBound) {
        for (const Involution& pi : enumerate_involutions(n)) ++counts[pi.stats().fixed_points];
        return counts;
    }
    for (int k = n % 2; k <= n; k += 2) {
        BigInt matchings = 1;  // (m-1)!! perfect matchings of m = n-k points
        for (int j = n - k - 1; j > 1; j -= 2) matchings *= j;
        counts[k] = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) * matchings;
    }
    return counts;
}

RationalFunction psi_recursive(int n) {
    if (n < 0) throw std::invalid_argument("psi: n must be nonnegative");
    const RationalFunction w1 = weight_w(1);
    RationalFunction prev(1), cur = w1;
    if (n == 0) return prev;
    for (int m = 1; m < n; ++m) {
        RationalFunction next = w1 * cur + RationalFunction(m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RationalFunction psi_enumerated(int n) {
    const auto counts = fixed_point_distribution(n);
    // sum_k c_k w1^k with w1 = (1+q)/(1-q) = -(q+1)/(q-1): put everything
    // over (q-1)^n, then reduce once.
    const Polynomial up = Polynomial{1, 1};
    const Polynomial down = Polynomial{-1, 1};
    Polynomial num;
    for (int k = 0; k <= n; ++k) {
        if (counts[k] == 0) continue;
        Polynomial term = up.pow(static_cast<unsigned>(k)) * down.pow(static_cast<unsigned>(n - k));
        term *= BigRational(k % 2 ? -counts[k] : counts[k]);
        num += term;
    }
    return RationalFunction::normalize(num, down.pow(static_cast<unsigned>(n)));
}

RationalFunction psi_n(int n) {
    RationalFunction rec = psi_recursive(n);
    RationalFunction enumerated = psi_enumerated(n);
    if (!(rec == enumerated))
        throw IdentityViolation("psi_" + std::to_string(n) + ": recursion gives " + rec.to_string() +
                                " but enumeration gives " + enumerated.to_string());
    return rec;
}

}  // namespace hookforge
