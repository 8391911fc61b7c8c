#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nsfn/rational.hpp"
#include "nsfn/report.hpp"

namespace nsfn {

/// Caller-supplied integer-valued arithmetic function. Must be total and
/// deterministic on the divisors it is evaluated at.
using ArithmeticFunction = std::function<std::int64_t(std::uint64_t)>;

// sum over d | n of Ns(a, d); equals n when n | a and 0 otherwise.
std::int64_t theorem1_sum(std::uint64_t a, std::uint64_t n);

// sum over d | n of |Ns(a, d)|; equals (a,n) * 2^omega(n/(a,n)).
std::int64_t theorem1_abs_sum(std::uint64_t a, std::uint64_t n);

struct InversionSides {
  std::int64_t lhs;  // sum over d | (a,n) of f(n/d) * d
  std::int64_t rhs;  // sum over d | n of Ns(a,d) * g(n/d), g(x) = sum over t|x of f(t)

  bool operator==(const InversionSides&) const = default;
};

// Both sides of the generalized inversion identity; g is materialized
// internally by divisor summation of f.
InversionSides invert(const ArithmeticFunction& f, std::uint64_t a, std::uint64_t n);

// sum over a = 1..n of Ns(a, n)^m, exact. Terms where mu(n/(a,n)) = 0
// contribute 0 for every m, including m = 0 (so 0^0 never arises).
// Integer-valued for m >= 1, rational for m <= 0. |m| is capped at 256.
Rational theorem3_lhs(std::uint64_t n, int m);

// phi(n)^m * prod over distinct primes p | n of (1 - 1/(1-p)^(m-1)),
// the closed form the lhs must match. Empty product for n = 1.
Rational theorem3_rhs(std::uint64_t n, int m);

struct RowSums {
  std::int64_t signed_sum;    // 1 when n = 1, else 0
  std::int64_t absolute_sum;  // phi(n) * 2^omega(n)

  bool operator==(const RowSums&) const = default;
};

// Both row sums over a = 1..n, computed directly from the row.
RowSums row_sums(std::uint64_t n);

// Sweep verifiers. Jobs <= 0 means use all available parallelism; reports are
// identical regardless of the job count.
VerificationReport verify_theorem1(std::uint64_t n_max, std::uint64_t a_max, int jobs = 1);
VerificationReport verify_theorem1_abs(std::uint64_t n_max, std::uint64_t a_max, int jobs = 1);

// Checks the inversion identity for f in {1, d, d^2, mu, phi} at
// a in {0, 1, floor(n/2), n, n+3}, plus the three specializations
// (first Moebius inversion, n*d(n) and S(n) as phi-convolutions).
VerificationReport verify_theorem2(std::uint64_t n_max);

VerificationReport verify_theorem3(std::uint64_t n_max, const std::vector<int>& m_set);
VerificationReport verify_row_sums(std::uint64_t n_max, int jobs = 1);

}  // namespace nsfn
