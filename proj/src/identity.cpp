#include "hookforge/identity.hpp"

#include "hookforge/exact/power_series.hpp"
#include "hookforge/involutions.hpp"
#include "hookforge/tableaux.hpp"

#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hookforge {

namespace {

VerificationReport make_report(std::string check, std::vector<std::pair<std::string, ParamValue>> params) {
    VerificationReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    return r;
}

VerificationReport sized_report(std::string check, int n) {
    return make_report(std::move(check), {{"n", std::int64_t{n}}});
}

std::string join(const std::vector<BigRational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string join(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

void require_distinct_contents(const std::vector<int>& xs, const std::vector<int>& ys) {
    if (xs.empty() || ys.size() + 1 != xs.size())
        throw std::invalid_argument("content sums need d >= 1 outer and d-1 inner values");
    std::set<int> seen(xs.begin(), xs.end());
    seen.insert(ys.begin(), ys.end());
    if (seen.size() != xs.size() + ys.size()) throw std::invalid_argument("requires distinct values");
}

// Deterministic rationals keyed on (seed, a, b, tag). mt19937_64 output is
// fixed by the standard; the reduction to a range is done here rather than
// with a distribution object so reports are reproducible across toolchains.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint32_t tag) {
        auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
        auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
        std::seed_seq seq{lo(seed), hi(seed), lo(a), hi(a), lo(b), hi(b), tag};
        rng_.seed(seq);
    }

    BigRational next() {
        const auto p = static_cast<long>(rng_() % 2'000'001ULL) - 1'000'000L;
        const auto r = static_cast<long>(rng_() % 1'000ULL) + 1L;
        return make_rational(p, r);
    }

private:
    std::mt19937_64 rng_;
};

constexpr std::uint32_t kProp3Tag = 0x70723033;  // "pr03"
constexpr std::uint32_t kEgfTag = 0x65676631;    // "egf1"

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, RationalFunction>& phi_cache() {
    static std::map<int, RationalFunction> cache;
    return cache;
}

RationalFunction q_power(int e) {
    // q^e as a rational function, e of either sign.
    if (e >= 0) return RationalFunction(Polynomial::monomial(static_cast<unsigned>(e)));
    return RationalFunction::from_reduced(Polynomial(1), Polynomial::monomial(static_cast<unsigned>(-e)));
}

// x-side and y-side terms of the content sum, factored.
CyclotomicProduct content_term(int k_value, const std::vector<int>& same, std::size_t skip,
                               const std::vector<int>& other) {
    CyclotomicProduct t;
    for (std::size_t i = 0; i < same.size(); ++i)
        if (i != skip) t *= weight_factored(k_value - same[i]);
    for (int v : other) t *= weight_factored(k_value - v).inverse();
    return t;
}

}  // namespace

// ---- weight sums ----------------------------------------------------------

RationalFunction phi_n(int n) {
    if (n < 0) throw std::invalid_argument("phi_n: n must be nonnegative");
    {
        std::lock_guard lock(phi_mutex());
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    CyclotomicSum sum;
    for (const Partition& shape : partitions_of(n)) sum.add(BigRational(f_lambda(shape)), weight_lambda_factored(shape));
    RationalFunction value = sum.value();
    std::lock_guard lock(phi_mutex());
    return phi_cache().try_emplace(n, std::move(value)).first->second;
}

RationalFunction phi_n_generic(int n) {
    RationalFunction acc;
    for (const Partition& shape : partitions_of(n)) {
        Polynomial num(BigRational(f_lambda(shape)));
        Polynomial den(1);
        for (int h : hook_lengths(shape)) {
            num *= Polynomial::monomial(static_cast<unsigned>(h)) + Polynomial(1);
            den *= Polynomial(1) - Polynomial::monomial(static_cast<unsigned>(h));
        }
        acc += RationalFunction::normalize(num, den);
    }
    return acc;
}

// ---- theorems -------------------------------------------------------------

VerificationReport verify_theorem1prime(int n) {
    auto report = sized_report("theorem1prime", n);
    try {
        const RationalFunction phi = phi_n(n);
        const RationalFunction psi = psi_n(n);
        if (!(phi == psi)) report.fail("n=" + std::to_string(n) + ": phi=" + phi.to_string() + " psi=" + psi.to_string());
    } catch (const IdentityViolation& e) {
        report.fail(e.what());
    }
    return report;
}

VerificationReport verify_theorem1(int order) {
    if (order < 0) throw std::invalid_argument("verify_theorem1: order must be nonnegative");
    auto report = make_report("theorem1", {{"order", std::int64_t{order}}});
    const auto N = static_cast<std::size_t>(order);

    PowerSeries<Polynomial> f(N);
    if (N >= 1) f[1] = Polynomial(1);
    if (N >= 2) f[2] = Polynomial::monomial(1, make_rational(1, 2));
    const PowerSeries<Polynomial> lhs = series_exp(f);

    for (int n = 0; n <= order; ++n) {
        const std::string at = "n=" + std::to_string(n) + ": ";
        RationalFunction sum;
        BigRational at_zero = 0;  // sum prod 1/h^2
        BigRational at_one = 0;   // sum prod 1/h
        for (const Partition& shape : partitions_of(n)) {
            Polynomial num(1), den(1);
            BigInt hook_product = 1;
            for (int h : hook_lengths(shape)) {
                auto [even, odd] = rho_parts(h);
                num *= even;
                den *= odd;
                hook_product *= h;
            }
            sum += RationalFunction::normalize(num, den);
            at_zero += BigRational(1) / BigRational(hook_product * hook_product);
            at_one += BigRational(1) / BigRational(hook_product);
        }
        const Polynomial& coeff = lhs[static_cast<std::size_t>(n)];
        if (!sum.is_polynomial()) {
            report.fail(at + "hook sum is not a polynomial in z: " + sum.to_string("z"));
            break;
        }
        const Polynomial& poly = sum.num();
        if (!(poly == coeff)) {
            report.fail(at + "hook sum " + poly.to_string("z") + " != series coefficient " + coeff.to_string("z"));
            break;
        }
        if (poly.degree() != n / 2) {
            report.fail(at + "degree in z is " + std::to_string(poly.degree()));
            break;
        }
        bool negative = false;
        for (const auto& c : poly.coefficients()) negative = negative || c < 0;
        if (negative) {
            report.fail(at + "negative coefficient in " + poly.to_string("z"));
            break;
        }
        const BigRational inv_fact = BigRational(1) / BigRational(factorial(static_cast<unsigned long>(n)));
        if (poly.eval(0) != at_zero || at_zero != inv_fact) {
            report.fail(at + "z=0 specialization: " + poly.eval(0).get_str() + ", sum 1/h^2 = " + at_zero.get_str() +
                        ", 1/n! = " + inv_fact.get_str());
            break;
        }
        const BigRational inv_ratio = BigRational(involution_count(n)) * inv_fact;
        if (poly.eval(1) != at_one || at_one != inv_ratio) {
            report.fail(at + "z=1 specialization: " + poly.eval(1).get_str() + ", sum 1/h = " + at_one.get_str() +
                        ", |Inv(n)|/n! = " + inv_ratio.get_str());
            break;
        }
    }
    return report;
}

VerificationReport verify_phi_recursion(int n) {
    if (n < 0) throw std::invalid_argument("verify_phi_recursion: n must be nonnegative");
    auto report = sized_report("phi_recursion", n);
    const RationalFunction w1 = weight_w(1);
    RationalFunction rhs = w1 * phi_n(n);
    if (n >= 1) rhs += RationalFunction(n) * phi_n(n - 1);
    const RationalFunction lhs = phi_n(n + 1);
    if (!(lhs == rhs)) report.fail("n=" + std::to_string(n) + ": phi_{n+1}=" + lhs.to_string() + " recursion=" + rhs.to_string());
    return report;
}

VerificationReport verify_weight_substitution(int n) {
    if (n < 1) throw std::invalid_argument("verify_weight_substitution: n must be positive");
    auto report = sized_report("weight_substitution", n);
    // sqrt(z) = (1-q)/(1+q)
    const RationalFunction root = RationalFunction::normalize(Polynomial{1, -1}, Polynomial{1, 1});
    const RationalFunction lhs = compose(rho(n), root * root);
    const RationalFunction rhs = weight_w(n) * root * make_rational(1, n);
    if (!(lhs == rhs)) report.fail("n=" + std::to_string(n) + ": rho(n, z(q))=" + lhs.to_string() + " w(n)*sqrt(z)/n=" + rhs.to_string());
    return report;
}

// ---- extend/retract -------------------------------------------------------

VerificationReport verify_lemma1(const Partition& shape) {
    auto report = make_report("lemma1", {{"lambda", shape.to_string()}});
    const CornerProfile p = corner_profile(shape);
    CyclotomicSum lhs, rhs;
    for (const Cell c : p.outer_cells) lhs.add(weight_lambda_factored(add_cell(shape, c)));
    rhs.add(weight_factored(1) * weight_lambda_factored(shape));
    for (const Cell c : p.inner_cells) rhs.add(weight_lambda_factored(remove_cell(shape, c)));
    const RationalFunction l = lhs.value();
    const RationalFunction r = rhs.value();
    if (!(l == r)) report.fail("lambda=" + shape.to_string() + ": added=" + l.to_string() + " w(1)w+removed=" + r.to_string());
    return report;
}

VerificationReport verify_corner_hooks(const Partition& shape, CornerKind kind, int k) {
    const CornerProfile p = corner_profile(shape);
    const int d = p.d();
    const bool outer = kind == CornerKind::outer;
    if (k < 1 || k > (outer ? d : d - 1)) throw std::out_of_range("corner index out of range");
    auto report = make_report("corner_hooks", {{"lambda", shape.to_string()},
                                               {"kind", std::string(outer ? "outer" : "inner")},
                                               {"k", std::int64_t{k}}});
    // 1-based views of the corner data.
    auto x = [&](int i) { return p.outer_contents[i - 1]; };
    auto y = [&](int i) { return p.inner_contents[i - 1]; };
    auto M = [&](int i) { return p.outer_cells[i - 1]; };
    auto N = [&](int i) { return p.inner_cells[i - 1]; };

    auto expect = [&](const Partition& s, Cell c, int want, const char* label) {
        if (!report.passed) return;
        int got = 0;
        try {
            got = hook_length(s, c);
        } catch (const std::out_of_range&) {
            report.fail("lambda=" + shape.to_string() + " " + label + ": cell " + to_string(c) + " missing from " + s.to_string());
            return;
        }
        if (got != want)
            report.fail("lambda=" + shape.to_string() + " " + label + ": hook at " + to_string(c) + " in " + s.to_string() +
                        " is " + std::to_string(got) + ", content difference is " + std::to_string(want));
    };

    if (outer) {
        const Partition plus = add_cell(shape, M(k));
        for (int i = 1; i < k; ++i) {
            expect(plus, {M(i).row, M(k).col}, x(i) - x(k), "h+(a_i,b_k)=x_i-x_k");
            expect(shape, {N(i).row, M(k).col}, y(i) - x(k), "h(alpha_i,b_k)=y_i-x_k");
        }
        for (int i = k + 1; i <= d; ++i) expect(plus, {M(k).row, M(i).col}, x(k) - x(i), "h+(a_k,b_i)=x_k-x_i");
        for (int i = k; i <= d - 1; ++i) expect(shape, {M(k).row, N(i).col}, x(k) - y(i), "h(a_k,beta_i)=x_k-y_i");
    } else {
        const Partition minus = remove_cell(shape, N(k));
        for (int i = 1; i < k; ++i) expect(minus, {N(i).row, N(k).col}, y(i) - y(k), "h-(alpha_i,beta_k)=y_i-y_k");
        for (int i = 1; i <= k; ++i) expect(shape, {M(i).row, N(k).col}, x(i) - y(k), "h(a_i,beta_k)=x_i-y_k");
        for (int i = k + 1; i <= d - 1; ++i) expect(minus, {N(k).row, N(i).col}, y(k) - y(i), "h-(alpha_k,beta_i)=y_k-y_i");
        for (int i = k + 1; i <= d; ++i) expect(shape, {N(k).row, M(i).col}, y(k) - x(i), "h(alpha_k,b_i)=y_k-x_i");
    }
    return report;
}

// ---- content identities ---------------------------------------------------

VerificationReport verify_prop2(const std::vector<int>& xs, const std::vector<int>& ys) {
    require_distinct_contents(xs, ys);
    auto report = make_report("prop2", {{"xs", join(xs)}, {"ys", join(ys)}});
    CyclotomicSum sum;
    for (std::size_t k = 0; k < xs.size(); ++k) sum.add(content_term(xs[k], xs, k, ys));
    for (std::size_t k = 0; k < ys.size(); ++k) sum.add(content_term(ys[k], ys, k, xs));
    const RationalFunction total = sum.value();
    if (!(total == RationalFunction(1)))
        report.fail("xs=" + join(xs) + " ys=" + join(ys) + ": sum=" + total.to_string());
    return report;
}

VerificationReport verify_prop2_reduction(const std::vector<int>& xs, const std::vector<int>& ys) {
    require_distinct_contents(xs, ys);
    auto report = make_report("prop2_reduction", {{"xs", join(xs)}, {"ys", join(ys)}});
    const std::size_t d = xs.size();
    std::vector<RationalFunction> a;
    for (int x : xs) a.push_back(q_power(-x));
    for (int y : ys) a.push_back(-q_power(-y));

    RationalFunction total;
    for (std::size_t k = 0; k < a.size(); ++k) {
        RationalFunction b(1);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != k) b *= (a[k] + a[i]) / (a[k] - a[i]);
        const RationalFunction expected = k < d ? content_term(xs[k], xs, k, ys).to_rational_function()
                                                : content_term(ys[k - d], ys, k - d, xs).to_rational_function();
        if (!(b == expected)) {
            report.fail("xs=" + join(xs) + " ys=" + join(ys) + ": term " + std::to_string(k + 1) + " substituted=" +
                        b.to_string() + " content form=" + expected.to_string());
            return report;
        }
        total += b;
    }
    if (!(total == RationalFunction(1)))
        report.fail("xs=" + join(xs) + " ys=" + join(ys) + ": substituted sum=" + total.to_string());
    return report;
}

std::vector<BigRational> prop3_terms(const std::vector<BigRational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) throw std::invalid_argument("requires distinct values (zero entry)");
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw std::invalid_argument("requires distinct values");
    }
    std::vector<BigRational> b;
    b.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        BigRational num = 1, den = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == k) continue;
            num *= a[k] + a[i];
            den *= a[k] - a[i];
        }
        b.push_back(num / den);
    }
    return b;
}

VerificationReport verify_prop3(const std::vector<BigRational>& a) {
    const auto n = static_cast<std::int64_t>(a.size());
    auto report = make_report("prop3", {{"n", n}});
    BigRational sum = 0;
    for (const auto& b : prop3_terms(a)) sum += b;
    const BigRational want = n % 2 ? 1 : 0;
    if (sum != want) report.fail("a=" + join(a) + ": sum=" + sum.get_str() + " expected " + want.get_str());
    return report;
}

VerificationReport verify_prop3_residues(const std::vector<BigRational>& a) {
    const auto n = a.size();
    auto report = make_report("prop3_residues", {{"n", static_cast<std::int64_t>(n)}});
    const std::vector<BigRational> b = prop3_terms(a);
    const std::string at = "a=" + join(a) + ": ";

    Polynomial num(1), den(1);
    for (const auto& v : a) {
        num *= Polynomial(std::vector<BigRational>{v, 1});
        den *= Polynomial(std::vector<BigRational>{-v, 1});
    }
    // c_0 is the ratio of leading coefficients of equal-degree polynomials.
    const auto [quo, rem] = divmod(num, den);
    if (num.degree() != den.degree() || num.leading() / den.leading() != 1 || !(quo == Polynomial(1))) {
        report.fail(at + "c_0 = " + quo.to_string("t") + ", expected 1");
        return report;
    }
    const BigRational c0 = 1;

    std::vector<BigRational> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Polynomial cofactor = exact_div(den, Polynomial(std::vector<BigRational>{-a[k], 1}));
        c[k] = rem.eval(a[k]) / cofactor.eval(a[k]);
        if (c[k] != 2 * a[k] * b[k]) {
            report.fail(at + "residue c_" + std::to_string(k + 1) + "=" + c[k].get_str() + " but 2 a_k b_k=" +
                        BigRational(2 * a[k] * b[k]).get_str());
            return report;
        }
    }

    const BigRational sign = n % 2 ? -1 : 1;
    BigRational at_zero = c0;
    for (std::size_t k = 0; k < n; ++k) at_zero -= c[k] / a[k];
    if (num.eval(0) / den.eval(0) != sign || at_zero != sign) {
        report.fail(at + "t=0 gives " + at_zero.get_str() + ", expected " + sign.get_str());
        return report;
    }
    BigRational b_sum = 0;
    for (const auto& v : b) b_sum += v;
    if (1 - sign != 2 * b_sum) {
        report.fail(at + "1-(-1)^n != 2 sum b_k, sum b_k=" + b_sum.get_str());
        return report;
    }

    // The decomposition itself, away from every pole.
    BigRational probe = 1;
    for (const auto& v : a) probe += abs(v);
    BigRational expansion = c0;
    for (std::size_t k = 0; k < n; ++k) expansion += c[k] / (probe - a[k]);
    if (num.eval(probe) / den.eval(probe) != expansion) report.fail(at + "partial fractions disagree at t=" + probe.get_str());
    return report;
}

MultiPoly prop3_cleared_lhs(int n) {
    MultiPoly lhs(n);
    for (int k = 0; k < n; ++k) {
        MultiPoly term = MultiPoly::constant(n, k % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i)
            if (i != k) term = term * MultiPoly::linear(n, k, 1, i, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (i != k && j != k) term = term * MultiPoly::linear(n, i, 1, j, -1);
        lhs += term;
    }
    return lhs;
}

VerificationReport verify_prop3_alternating(int n) {
    if (n < 2 || n > kAlternatingBound)
        throw std::invalid_argument("verify_prop3_alternating: n must lie in 2.." + std::to_string(kAlternatingBound));
    auto report = sized_report("prop3_alternating", n);
    const MultiPoly lhs = prop3_cleared_lhs(n);
    const MultiPoly negated = -lhs;
    for (int r = 0; r + 1 < n; ++r) {
        if (!(lhs.swap_vars(r, r + 1) == negated)) {
            report.fail("n=" + std::to_string(n) + ": not alternating under a_" + std::to_string(r + 1) + " <-> a_" +
                        std::to_string(r + 2));
            return report;
        }
    }
    if (lhs.total_degree() > n * (n - 1) / 2) {
        report.fail("n=" + std::to_string(n) + ": degree " + std::to_string(lhs.total_degree()) + " exceeds C(n,2)");
        return report;
    }
    // Staircase monomial a_1^{n-1} a_2^{n-2} ... a_{n-1} has coefficient 1 in
    // the Vandermonde product, so its coefficient in lhs is the quotient.
    MultiPoly::Exponents staircase(n);
    for (int i = 0; i < n; ++i) staircase[i] = static_cast<std::uint8_t>(n - 1 - i);
    const BigInt delta = lhs.coeff(staircase);
    MultiPoly expected = vandermonde(n);
    expected *= delta;
    if (!(lhs == expected)) {
        const MultiPoly diff = lhs - expected;
        report.fail("n=" + std::to_string(n) + ": lhs - delta*V has leading part " + diff.to_string().substr(0, 200));
        return report;
    }
    if (delta != n % 2)
        report.fail("n=" + std::to_string(n) + ": quotient by the Vandermonde product is " + delta.get_str() + ", expected " +
                    std::to_string(n % 2));
    return report;
}

std::vector<BigRational> sample_distinct_rationals(int n, std::uint64_t seed, std::uint64_t trial) {
    if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
    SampleStream stream(seed, static_cast<std::uint64_t>(n), trial, kProp3Tag);
    std::vector<BigRational> out;
    out.reserve(n);
    while (static_cast<int>(out.size()) < n) {
        BigRational v = stream.next();
        if (v == 0) continue;
        bool clash = false;
        for (const auto& u : out) clash = clash || u == v || u == -v;
        if (!clash) out.push_back(std::move(v));
    }
    return out;
}

// ---- sweeps ---------------------------------------------------------------

VerificationReport sweep_lemma1(int n) {
    auto report = sized_report("lemma1", n);
    for (const Partition& shape : partitions_of(n)) {
        auto r = verify_lemma1(shape);
        if (!r.passed) {
            report.fail(*r.witness);
            break;
        }
    }
    return report;
}

VerificationReport sweep_corner_hooks(int n) {
    auto report = sized_report("corner_hooks", n);
    for (const Partition& shape : partitions_of(n)) {
        const int d = corner_profile(shape).d();
        for (int k = 1; k <= d && report.passed; ++k) {
            auto r = verify_corner_hooks(shape, CornerKind::outer, k);
            if (!r.passed) report.fail(*r.witness);
        }
        for (int k = 1; k <= d - 1 && report.passed; ++k) {
            auto r = verify_corner_hooks(shape, CornerKind::inner, k);
            if (!r.passed) report.fail(*r.witness);
        }
        if (!report.passed) break;
    }
    return report;
}

VerificationReport sweep_prop2(int n) {
    auto report = sized_report("prop2", n);
    for (const Partition& shape : partitions_of(n)) {
        const CornerProfile p = corner_profile(shape);
        auto r = verify_prop2(p.outer_contents, p.inner_contents);
        if (!r.passed) {
            report.fail("lambda=" + shape.to_string() + " " + *r.witness);
            break;
        }
    }
    return report;
}

VerificationReport sweep_prop2_reduction(int n) {
    auto report = sized_report("prop2_reduction", n);
    for (const Partition& shape : partitions_of(n)) {
        const CornerProfile p = corner_profile(shape);
        auto r = verify_prop2_reduction(p.outer_contents, p.inner_contents);
        if (!r.passed) {
            report.fail("lambda=" + shape.to_string() + " " + *r.witness);
            break;
        }
    }
    return report;
}

VerificationReport verify_bijection(int n) {
    if (n < 1) throw std::invalid_argument("verify_bijection: n must be positive");
    auto report = sized_report("syt_bijection", n);
    const auto big = enumerate_syt(n);
    const auto small = enumerate_syt(n - 1);

    std::set<std::pair<std::string, int>> images;
    std::size_t pairs = 0;
    for (const StandardTableau& P : big) {
        for (const Cell x : P.corners()) {
            ++pairs;
            const Ejection e = reverse_row_insert(P, x);
            if (e.tableau.size() != n - 1 || e.letter < 1 || e.letter > n) {
                report.fail("P=" + P.to_string() + " x=" + to_string(x) + ": image out of range");
                return report;
            }
            const Insertion back = forward_row_insert(e.tableau, e.letter);
            if (!(back.tableau == P) || back.cell != x) {
                report.fail("P=" + P.to_string() + " x=" + to_string(x) + ": reverse gives (" + e.tableau.to_string() + ", " +
                            std::to_string(e.letter) + "), forward returns (" + back.tableau.to_string() + ", " +
                            to_string(back.cell) + ")");
                return report;
            }
            images.emplace(e.tableau.to_string(), e.letter);
        }
    }
    if (images.size() != pairs || pairs != small.size() * static_cast<std::size_t>(n)) {
        report.fail("n=" + std::to_string(n) + ": " + std::to_string(pairs) + " (P,x) pairs, " + std::to_string(images.size()) +
                    " distinct images, |SYT(n-1)|*n=" + std::to_string(small.size() * n));
        return report;
    }
    for (const StandardTableau& Pm : small) {
        for (int i = 1; i <= n; ++i) {
            const Insertion ins = forward_row_insert(Pm, i);
            const Ejection back = reverse_row_insert(ins.tableau, ins.cell);
            if (!(back.tableau == Pm) || back.letter != i) {
                report.fail("P-=" + Pm.to_string() + " i=" + std::to_string(i) + ": forward gives (" + ins.tableau.to_string() +
                            ", " + to_string(ins.cell) + "), reverse returns (" + back.tableau.to_string() + ", " +
                            std::to_string(back.letter) + ")");
                return report;
            }
        }
    }
    return report;
}

VerificationReport verify_corner_sum(int n) {
    if (n < 1) throw std::invalid_argument("verify_corner_sum: n must be positive");
    auto report = sized_report("corner_sum", n);
    std::size_t corners = 0;
    for (const StandardTableau& P : enumerate_syt(n)) corners += P.corners().size();
    const std::size_t want = static_cast<std::size_t>(n) * enumerate_syt(n - 1).size();
    if (corners != want)
        report.fail("n=" + std::to_string(n) + ": sum of corners " + std::to_string(corners) + " != n|SYT(n-1)| " + std::to_string(want));
    return report;
}

VerificationReport verify_counting(int n) {
    if (n < 0) throw std::invalid_argument("verify_counting: n must be nonnegative");
    auto report = sized_report("counting", n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    BigInt squares = 0, plain = 0;
    for (const Partition& shape : partitions_of(n)) {
        const BigInt f = f_lambda(shape);
        squares += f * f;
        plain += f;
        if (n <= 10) {
            const auto count = enumerate_syt(shape).size();
            if (f != count) {
                report.fail(at + "f^" + shape.to_string() + "=" + f.get_str() + " but enumeration finds " + std::to_string(count));
                return report;
            }
        }
    }
    const BigInt n_fact = factorial(static_cast<unsigned long>(n));
    if (squares != n_fact) {
        report.fail(at + "sum (f^lambda)^2 = " + squares.get_str() + " != n! = " + n_fact.get_str());
        return report;
    }
    const BigInt inv = involution_count(n);
    if (plain != inv) {
        report.fail(at + "sum f^lambda = " + plain.get_str() + " != |Inv(n)| = " + inv.get_str());
        return report;
    }
    if (n <= kEnumerationBound) {
        const auto enumerated = enumerate_involutions(n).size();
        if (inv != enumerated)
            report.fail(at + "recurrence |Inv(n)| = " + inv.get_str() + " but enumeration finds " + std::to_string(enumerated));
    }
    return report;
}

VerificationReport sweep_prop3(int n, int trials, std::uint64_t seed) {
    auto report = make_report("prop3", {{"n", std::int64_t{n}}, {"trials", std::int64_t{trials}}});
    for (int t = 0; t < trials && report.passed; ++t) {
        auto r = verify_prop3(sample_distinct_rationals(n, seed, static_cast<std::uint64_t>(t)));
        if (!r.passed) report.fail("trial " + std::to_string(t) + " " + *r.witness);
    }
    return report;
}

VerificationReport sweep_prop3_residues(int n, int trials, std::uint64_t seed) {
    auto report = make_report("prop3_residues", {{"n", std::int64_t{n}}, {"trials", std::int64_t{trials}}});
    for (int t = 0; t < trials && report.passed; ++t) {
        auto r = verify_prop3_residues(sample_distinct_rationals(n, seed, static_cast<std::uint64_t>(t)));
        if (!r.passed) report.fail("trial " + std::to_string(t) + " " + *r.witness);
    }
    return report;
}

VerificationReport verify_egf_at(int order, const BigRational& u1, const BigRational& u2) {
    auto report = make_report("egf", {{"order", std::int64_t{order}}});
    const std::string at = "u1=" + u1.get_str() + " u2=" + u2.get_str() + ": ";
    if (!verify_involution_egf(order, u1, u2)) {
        report.fail(at + "series coefficients differ from g_n/n!");
        return report;
    }
    for (int n = 0; n <= std::min(order, 10); ++n) {
        const BigRational rec = g_poly(n, u1, u2);
        const BigRational direct = g_poly_oracle(n, u1, u2);
        if (rec != direct) {
            report.fail(at + "g_" + std::to_string(n) + " recursion " + rec.get_str() + " != enumeration " + direct.get_str());
            break;
        }
    }
    return report;
}

VerificationReport verify_egf(int order, std::uint64_t seed, std::uint64_t trial) {
    SampleStream stream(seed, static_cast<std::uint64_t>(order), trial, kEgfTag);
    const BigRational u1 = stream.next();
    const BigRational u2 = stream.next();
    auto report = verify_egf_at(order, u1, u2);
    report.params.emplace_back("trial", static_cast<std::int64_t>(trial));
    return report;
}

}  // namespace hookforge
