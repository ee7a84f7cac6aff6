#pragma once

// Exact integer and rational scalars. GMP's C++ classes keep mpq values in
// lowest terms with a positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hookforge {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised for mathematically undefined operations (division by zero, poles,
/// exp of a series with nonzero constant term).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an identity that must hold by construction turns out false.
/// Carries both sides so the failure can be reproduced.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("division by zero");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input and
/// ArithmeticError on a zero denominator.
BigRational parse_rational(const std::string& text);

}  // namespace hookforge
