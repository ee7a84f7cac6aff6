#include <doctest.h>

#include "hookforge/identity.hpp"
#include "hookforge/weights.hpp"

#include <set>

using namespace hookforge;

namespace {

std::vector<BigRational> rationals(std::initializer_list<long> xs) {
    std::vector<BigRational> out;
    for (long x : xs) out.push_back(x);
    return out;
}

void check_pass(const VerificationReport& r) {
    INFO(r.check << " " << r.witness.value_or(""));
    CHECK(r.passed);
    CHECK_FALSE(r.witness.has_value());
}

}  // namespace

TEST_CASE("phi examples") {
    CHECK(phi_n(0) == RationalFunction(1));
    CHECK(phi_n(1) == weight_w(1));
    CHECK(phi_n(2) == RationalFunction::normalize(Polynomial{2, 0, 2}, Polynomial{1, -2, 1}));
    CHECK(phi_n(2) == RationalFunction(2) * weight_w(1) * weight_w(2));
}

TEST_CASE("theorem1prime") {
    for (int n : {0, 1, 2, 5, 15}) check_pass(verify_theorem1prime(n));
}

TEST_CASE("theorem1") {
    const auto r = verify_theorem1(8);
    check_pass(r);
    CHECK(r.check == "theorem1");
}

TEST_CASE("phi recursion") {
    for (int n = 0; n <= 8; ++n) check_pass(verify_phi_recursion(n));
    CHECK(phi_n(2) == weight_w(1) * phi_n(1) + phi_n(0));
    CHECK(phi_n(3) == weight_w(1) * phi_n(2) + RationalFunction(2) * phi_n(1));
}

TEST_CASE("weight substitution") {
    for (int n = 1; n <= 12; ++n) check_pass(verify_weight_substitution(n));
    // n = 2: (1+z)/4 at z = ((1-q)/(1+q))^2 is (1+q^2)/(2(1+q)^2).
    const auto s = RationalFunction::normalize(Polynomial{1, -1}, Polynomial{1, 1});
    CHECK(compose(rho(2), s * s) == RationalFunction::normalize(Polynomial{1, 0, 1}, Polynomial{2, 4, 2}));
}

TEST_CASE("lemma1 examples") {
    check_pass(verify_lemma1(Partition()));
    check_pass(verify_lemma1(Partition({1})));
    check_pass(verify_lemma1(Partition({2, 1})));
    // For (1): w((2)) + w((1,1)) = w(1)^2 + 1.
    CHECK(weight_lambda(Partition({2})) + weight_lambda(Partition({1, 1})) == weight_w(1) * weight_w(1) + RationalFunction(1));
}

TEST_CASE("corner hooks") {
    check_pass(verify_corner_hooks(Partition({3, 1}), CornerKind::outer, 2));
    CHECK(hook_length(add_cell(Partition({3, 1}), {2, 2}), {1, 2}) == 3);
    check_pass(verify_corner_hooks(Partition({1}), CornerKind::outer, 1));
    check_pass(verify_corner_hooks(Partition({2, 2}), CornerKind::inner, 1));
    CHECK(hook_length(Partition({2, 2}), {1, 2}) == 2);
    CHECK_THROWS_AS(verify_corner_hooks(Partition({2, 2}), CornerKind::inner, 2), std::out_of_range);
    CHECK_THROWS_AS(verify_corner_hooks(Partition({2, 2}), CornerKind::outer, 0), std::out_of_range);
    for (int n = 0; n <= 8; ++n) check_pass(sweep_corner_hooks(n));
}

TEST_CASE("prop2 on contents") {
    check_pass(verify_prop2({0}, {}));
    check_pass(verify_prop2({3, 0, -2}, {2, -1}));
    check_pass(verify_prop2({2, -2}, {0}));
    // The identity only needs distinct values, not contents of a shape.
    check_pass(verify_prop2({7, 1, -4}, {3, 5}));
    CHECK_THROWS(verify_prop2({1, 1}, {0}));
    CHECK_THROWS(verify_prop2({1, 0}, {1}));
    check_pass(verify_prop2_reduction({3, 0, -2}, {2, -1}));
    for (int n = 0; n <= 8; ++n) check_pass(sweep_prop2(n));
}

TEST_CASE("prop3 examples") {
    check_pass(verify_prop3(rationals({5})));
    check_pass(verify_prop3(rationals({1, 2})));
    check_pass(verify_prop3(rationals({1, 2, 4})));
    const auto b = prop3_terms(rationals({1, 2, 4}));
    CHECK(b == std::vector<BigRational>{5, -9, 5});
    CHECK_THROWS_WITH(verify_prop3(rationals({1, 3, 1})), doctest::Contains("requires distinct values"));
}

TEST_CASE("prop3 residues") {
    check_pass(verify_prop3_residues(rationals({1})));
    check_pass(verify_prop3_residues(rationals({1, 2})));
    check_pass(verify_prop3_residues(rationals({1, 2, 4})));
    const auto b = prop3_terms(rationals({1, 2}));
    CHECK(b == std::vector<BigRational>{-3, 3});
    // c_k = 2 a_k b_k gives [-6, 12], and 1 - (-6/1 + 12/2) = 1 = (-1)^2.
    CHECK(2 * 1 * b[0] == -6);
    CHECK(2 * 2 * b[1] == 12);
}

TEST_CASE("prop3 alternating expansion") {
    CHECK(prop3_cleared_lhs(2).is_zero());
    CHECK(prop3_cleared_lhs(4).is_zero());
    CHECK(prop3_cleared_lhs(3) == vandermonde(3));
    CHECK(prop3_cleared_lhs(5) == vandermonde(5));
    for (int n = 2; n <= 5; ++n) check_pass(verify_prop3_alternating(n));
    CHECK_THROWS(verify_prop3_alternating(1));
    CHECK_THROWS(verify_prop3_alternating(kAlternatingBound + 1));
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde(2) == MultiPoly::linear(2, 0, 1, 1, -1));
    const MultiPoly v = vandermonde(4);
    CHECK(v.total_degree() == 6);
    for (int i = 0; i + 1 < 4; ++i) CHECK(v.swap_vars(i, i + 1) == -v);
}

TEST_CASE("sampling") {
    const auto a = sample_distinct_rationals(30, 42, 3);
    const auto b = sample_distinct_rationals(30, 42, 3);
    CHECK(a == b);
    CHECK(a != sample_distinct_rationals(30, 42, 4));
    CHECK(a != sample_distinct_rationals(30, 43, 3));
    std::set<std::string> seen;
    for (const auto& x : a) {
        CHECK(x != 0);
        CHECK(abs(x.get_num()) <= 1000000);
        CHECK(x.get_den() <= 1000);
        seen.insert(to_string(BigRational(abs(x))));
    }
    CHECK(seen.size() == a.size());
}

TEST_CASE("sweeps") {
    check_pass(sweep_prop3(12, 3, 0));
    check_pass(sweep_prop3_residues(12, 3, 0));
    for (int n = 0; n <= 8; ++n) check_pass(sweep_lemma1(n));
    for (int n = 1; n <= 6; ++n) {
        check_pass(verify_bijection(n));
        check_pass(verify_corner_sum(n));
    }
    for (int n = 0; n <= 9; ++n) check_pass(verify_counting(n));
    check_pass(verify_egf(8, 0, 0));
    check_pass(verify_egf_at(6, 1, 1));
}

TEST_CASE("report parameters") {
    const auto r = sweep_prop3(4, 2, 9);
    CHECK(r.check == "prop3");
    REQUIRE(r.params.size() == 2);
    CHECK(r.params[0].first == "n");
    CHECK(std::get<std::int64_t>(r.params[0].second) == 4);
}
