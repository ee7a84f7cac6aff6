#pragma once

#include "hookforge/exact/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hookforge {

/// Sparse polynomial with integer coefficients in a fixed number of
/// variables a_1..a_n. Only used for the small symbolic checks (n <= 6), so
/// monomials are plain exponent vectors in an ordered map.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint8_t>;

    explicit MultiPoly(int vars) : vars_(vars) {}

    static MultiPoly constant(int vars, const BigInt& c);
    /// c_i a_i + c_j a_j, the linear forms the checks are built from.
    static MultiPoly linear(int vars, int i, long ci, int j, long cj);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    /// Coefficient of a monomial; zero when absent.
    BigInt coeff(const Exponents& e) const;
    /// Largest total degree; -1 for the zero polynomial.
    int total_degree() const;

    /// The polynomial with variables a_i and a_j exchanged (0-based).
    MultiPoly swap_vars(int i, int j) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const BigInt& s);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= BigInt(-1); }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const BigInt& c);
    int vars_;
    std::map<Exponents, BigInt> terms_;
};

/// prod_{i<j} (a_i - a_j)
MultiPoly vandermonde(int n);

}  // namespace hookforge
