#include "nsfn/rational.hpp"

#include <limits>
#include <stdexcept>

namespace nsfn {

Rational make_rational(BigInt num, BigInt den) {
  if (sgn(den) == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) {
    return Rational(1);
  }
  Rational b = base;
  if (exponent < 0) {
    if (sgn(base) == 0) {
      throw std::domain_error("rational_pow: zero base with negative exponent");
    }
    b = Rational(1) / base;
    exponent = -exponent;
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // powers of a canonical fraction stay canonical
  return result;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value) { return value.get_str(10); }

bool fits_int64(const BigInt& value) {
  static_assert(sizeof(long) == 8, "LP64 platform expected");
  return value.fits_slong_p();
}

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) {
    throw std::overflow_error("to_int64: value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value.get_si());
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace nsfn
