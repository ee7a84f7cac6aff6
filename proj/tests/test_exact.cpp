#include <doctest.h>

#include "hookforge/exact/polynomial.hpp"
#include "hookforge/exact/power_series.hpp"
#include "hookforge/exact/rational.hpp"
#include "hookforge/exact/rational_function.hpp"

#include <random>

using namespace hookforge;

namespace {

BigRational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    for (;;) {
        const long p = static_cast<long>(rng() % 2001) - 1000;
        const long q = static_cast<long>(rng() % 97) + 1;
        if (nonzero && p == 0) continue;
        return make_rational(p, q);
    }
}

Polynomial random_poly(std::mt19937_64& rng, int max_degree, bool nonzero = true) {
    for (;;) {
        std::vector<BigRational> c(static_cast<std::size_t>(rng() % (max_degree + 1)) + 1);
        for (auto& x : c) x = random_rational(rng);
        Polynomial p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

const Polynomial q = Polynomial::x();

}  // namespace

TEST_CASE("rational construction and errors") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK_THROWS_WITH_AS(make_rational(1, 0), "division by zero", ArithmeticError);
    CHECK(parse_rational("-7/21") == make_rational(-1, 3));
    CHECK(parse_rational("5") == 5);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const BigRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (BigRational(1) / a) == 1);
    }
}

TEST_CASE("polynomial basics") {
    const Polynomial p{1, 2, 3};  // 1 + 2q + 3q^2
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == -1);
    CHECK(p.eval(2) == 17);
    CHECK((p * Polynomial{-1, 1}) == Polynomial{-1, -1, -1, 3});
    CHECK(p.reflect() == Polynomial{1, -2, 3});  // p(-q)
    CHECK((q + 1).pow(3) == Polynomial{1, 3, 3, 1});
    CHECK((p - p).is_zero());
    CHECK(p.to_string("q") == "3*q^2 + 2*q + 1");
}

TEST_CASE("divmod and exact division") {
    auto [quot, rem] = divmod(Polynomial{-1, 0, 1}, Polynomial{-1, 1});
    CHECK(quot == Polynomial{1, 1});
    CHECK(rem.is_zero());
    CHECK_THROWS_WITH(divmod(q, Polynomial()), "division by zero");
    CHECK_THROWS_WITH(exact_div(q * q + 1, q), "inexact polynomial division");
}

TEST_CASE("polynomial gcd") {
    CHECK(poly_gcd(Polynomial{-1, 0, 1}, Polynomial{1, 1}) == Polynomial{1, 1});
    CHECK(poly_gcd(q, Polynomial(1)) == Polynomial(1));
    // 6q^2+6q = 6q(q+1) and 4q share only q.
    CHECK(poly_gcd(Polynomial{0, 6, 6}, Polynomial{0, 4}) == q);
    CHECK(poly_gcd(Polynomial(), Polynomial{2, 4}) == Polynomial(std::vector<BigRational>{make_rational(1, 2), 1}));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::invalid_argument);
}

TEST_CASE("a*b/b recovers a") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        const Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6);
        CHECK(exact_div(a * b, b) == a);
        const RationalFunction r = RationalFunction(a * b) / RationalFunction(b);
        CHECK(r == RationalFunction(a));
    }
}

TEST_CASE("canonical form") {
    const auto r1 = RationalFunction::normalize(Polynomial{-1, 0, 1}, Polynomial{-1, 1});
    CHECK(r1.num() == Polynomial{1, 1});
    CHECK(r1.den() == Polynomial(1));

    const auto r2 = RationalFunction::normalize(Polynomial{1, 1}, Polynomial{1, -1});
    CHECK(r2.num() == Polynomial{-1, -1});
    CHECK(r2.den() == Polynomial{-1, 1});

    const auto r3 = RationalFunction::normalize(Polynomial(), Polynomial{2, 0, 0, 1});
    CHECK(r3.is_zero());
    CHECK(r3.den() == Polynomial(1));

    CHECK_THROWS_WITH(RationalFunction::normalize(q, Polynomial()), "division by zero");
}

TEST_CASE("canonical equality agrees with cross multiplication") {
    std::mt19937_64 rng(3);
    int equal_cases = 0;
    for (int i = 0; i < 500; ++i) {
        const Polynomial n = random_poly(rng, 4, false), d = random_poly(rng, 4);
        const RationalFunction a = RationalFunction::normalize(n, d);
        RationalFunction b;
        if (i % 2 == 0) {
            // Same value, different unreduced representation.
            const Polynomial k = random_poly(rng, 3);
            b = RationalFunction::normalize(n * k, d * k);
        } else {
            b = RationalFunction::normalize(random_poly(rng, 4, false), random_poly(rng, 4));
        }
        CHECK((a == b) == cross_equal(a, b));
        equal_cases += a == b ? 1 : 0;
    }
    CHECK(equal_cases >= 250);
}

TEST_CASE("rational function evaluation") {
    const auto w1 = RationalFunction::normalize(Polynomial{1, 1}, Polynomial{1, -1});
    CHECK(w1.eval(make_rational(1, 2)) == 3);
    CHECK(RationalFunction(Polynomial{1, 1}).eval(0) == 1);
    CHECK_THROWS_WITH_AS(w1.eval(1), "pole", ArithmeticError);
}

TEST_CASE("rational function field operations") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto a = RationalFunction::normalize(random_poly(rng, 3, false), random_poly(rng, 3));
        const auto b = RationalFunction::normalize(random_poly(rng, 3), random_poly(rng, 3));
        const auto c = RationalFunction::normalize(random_poly(rng, 3, false), random_poly(rng, 3));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a / b) * b == a);
        CHECK(a - a == RationalFunction());
        CHECK(b * b.inverse() == RationalFunction(1));
    }
    CHECK_THROWS_AS(RationalFunction().inverse(), ArithmeticError);
}

TEST_CASE("composition") {
    // f(x) = x^2 + 1 at x = 1/(q+1) gives (q^2 + 2q + 2)/(q+1)^2.
    const auto x = RationalFunction(1) / RationalFunction(Polynomial{1, 1});
    const auto got = substitute(Polynomial{1, 0, 1}, x);
    CHECK(got == RationalFunction::normalize(Polynomial{2, 2, 1}, Polynomial{1, 2, 1}));
    const auto f = RationalFunction::normalize(Polynomial{0, 1}, Polynomial{1, 1});  // x/(1+x)
    CHECK(compose(f, x) == RationalFunction::normalize(Polynomial(1), Polynomial{2, 1}));
}

TEST_CASE("series exp examples") {
    PowerSeries<BigRational> t(3);
    t[1] = 1;
    const auto e = series_exp(t);
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == make_rational(1, 2));
    CHECK(e[3] == make_rational(1, 6));

    // t + z t^2/2 to order 2 gives 1 + t + (1/2 + z/2) t^2.
    PowerSeries<Polynomial> f(2);
    f[1] = Polynomial(1);
    f[2] = Polynomial::monomial(1, make_rational(1, 2));
    const auto g = series_exp(f);
    CHECK(g[0] == Polynomial(1));
    CHECK(g[1] == Polynomial(1));
    CHECK(g[2] == Polynomial(std::vector<BigRational>{make_rational(1, 2), make_rational(1, 2)}));

    const auto zero = series_exp(PowerSeries<BigRational>(5));
    CHECK(zero[0] == 1);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(zero[k] == 0);

    PowerSeries<BigRational> bad(2);
    bad[0] = 1;
    CHECK_THROWS_WITH(series_exp(bad), "exp requires zero constant term");
}

TEST_CASE("exp(f) exp(-f) = 1") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t N = 1 + rng() % 10;
        PowerSeries<BigRational> f(N);
        for (std::size_t k = 1; k <= N; ++k) f[k] = random_rational(rng);
        const auto product = series_exp(f) * series_exp(-f);
        CHECK(product[0] == 1);
        for (std::size_t k = 1; k <= N; ++k) CHECK(product[k] == 0);
    }
}
