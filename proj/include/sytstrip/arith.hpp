#pragma once

#include <gmpxx.h>

#include <string>

namespace sytstrip {

using BigCount = mpz_class;       // exact nonnegative counts
using BigInt = mpz_class;         // signed intermediates (C_i(n), sums)
using ExactRational = mpq_class;  // always kept canonical

/// n!, memoized per process. Safe to call concurrently.
const BigInt& factorial(unsigned n);

/// Binomial coefficient by the multiplicative formula; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Returns +1 or -1.
inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Converts a rational that must be integral; throws ExactnessError otherwise.
BigInt require_integer(const ExactRational& value, const std::string& what);

/// Exact quotient; throws ExactnessError if denominator does not divide numerator.
BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const std::string& what);

inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const ExactRational& v) { return v.get_str(); }

}  // namespace sytstrip
