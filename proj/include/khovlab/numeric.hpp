#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace khovlab {

// All counting and geometry is exact: integers are GMP bigints, ratios are
// GMP rationals kept canonical (lowest terms, positive denominator).
using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with positive denominator. Throws on den == 0.
Rational make_rational(const BigInt &num, const BigInt &den);

/// Largest integer <= q.
BigInt rational_floor(const Rational &q);

/// Smallest integer >= q.
BigInt rational_ceil(const Rational &q);

BigInt factorial(unsigned n);

/// C(n, k) as an exact integer; 0 when k > n.
BigInt binomial(const BigInt &n, unsigned k);

/// base^exp for nonnegative exp.
BigInt power(const BigInt &base, unsigned long exp);

/// "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational &q);

/// Fixed-point decimal approximation, exact division with truncation toward
/// zero. Display only; never used in comparisons.
std::string rational_to_decimal(const Rational &q, unsigned digits = 4);

} // namespace khovlab
