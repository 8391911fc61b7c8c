#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nsfn {

/// Exact arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational in canonical form: lowest terms, denominator > 0, zero is 0/1.
/// All gmp operators preserve canonical form; construct through make_rational
/// when numerator and denominator come in separately.
using Rational = mpq_class;

// Canonicalizing constructor. Throws std::domain_error when den == 0.
Rational make_rational(BigInt num, BigInt den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// base^exponent with negative exponents inverting the base; 0^e for e < 0 is a
// domain error, 0^0 is 1.
Rational rational_pow(const Rational& base, long exponent);

// Plain decimal rendering, never exponent notation. Rationals print as "n/d",
// or just "n" when the denominator is 1.
std::string to_decimal(const BigInt& value);
std::string to_decimal(const Rational& value);

bool fits_int64(const BigInt& value);
std::int64_t to_int64(const BigInt& value);  // throws std::overflow_error when it does not fit

double to_double(const Rational& value);

}  // namespace nsfn
