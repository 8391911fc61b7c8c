#pragma once

#include <cstdint>
#include <vector>

#include "nsfn/rational.hpp"
#include "nsfn/report.hpp"

namespace nsfn {

// Ceiling for the product parameter n. The product prod_{i=1}^{n-1}(1 - q^i)
// has degree n(n-1)/2 and coefficients of roughly 0.29*n bits, so memory grows
// cubically; 1024 keeps a full expansion under a few tens of megabytes.
inline constexpr std::uint64_t kMaxProductParam = 1024;

/// Polynomial in the formal variable q with exact integer coefficients,
/// indexed by exponent. Immutable once built.
class QPolynomial {
 public:
  explicit QPolynomial(std::vector<BigInt> coefficients);

  std::uint64_t degree() const { return coefficients_.size() - 1; }
  const BigInt& coeff(std::uint64_t k) const;          // throws std::out_of_range past degree
  const BigInt& coeff_or_zero(std::uint64_t k) const;  // 0 past degree
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

 private:
  std::vector<BigInt> coefficients_;
};

/// Incremental expansion of prod_{i=1}^{n-1}(1 - q^i) for consecutive n.
/// Starts at n = 1 (the empty product); advance() multiplies in the next
/// sparse factor in place, costing one pass over the coefficient vector.
class ProductExpander {
 public:
  ProductExpander() : coefficients_{BigInt(1)} {}

  std::uint64_t n() const { return n_; }
  std::uint64_t degree() const { return coefficients_.size() - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  void advance();                     // n -> n + 1
  void advance_to(std::uint64_t n);   // repeated advance; n >= current n

 private:
  std::uint64_t n_ = 1;
  std::vector<BigInt> coefficients_;
};

// Exact expansion of prod_{i=1}^{n-1}(1 - q^i); the constant 1 for n = 1.
// Throws std::length_error past kMaxProductParam.
QPolynomial poly_product(std::uint64_t n);

// Sum of product coefficients over the residue class a (mod n):
// sum of coeff(a + n*k) over all k >= 0 with a + n*k <= degree.
BigInt residue_class_sum(const QPolynomial& product, std::uint64_t a, std::uint64_t n);

// The conjectured coefficient form of Ns(a, n) for 0 <= a <= n-1:
// sum over k of p_{n-1}(a + n*k), k up to floor((n-1)/2 - a/n). Builds the
// product internally; use verify_theorem4 for ranges of n.
BigInt theorem4_ns(std::uint64_t a, std::uint64_t n);

// Exhaustive conjecture sweep: compares theorem4_ns with Ns for every
// 1 <= n <= n_max, 0 <= a <= n-1. Any counterexample is a finding.
VerificationReport verify_theorem4(std::uint64_t n_max, int jobs = 1);

// phi(n) as the coefficient sum over class 0: sum of p_{n-1}(n*k) for
// k <= floor((n-1)/2).
BigInt corollary1_phi_sum(std::uint64_t n);

// mu(n) as the coefficient sum over class 1: sum of p_{n-1}(1 + n*k) for
// k <= floor((n-2)/2). Undefined (domain error) at n = 1.
BigInt corollary1_mu_sum(std::uint64_t n);

struct PhiMuSums {
  BigInt phi_sum;
  BigInt mu_sum;
};

// Both coefficient sums at once; requires n >= 2.
PhiMuSums corollary1_phi_mu(std::uint64_t n);

VerificationReport verify_corollary1(std::uint64_t n_max, int jobs = 1);

// Coefficient characterization of odd primes: with p := n,
//   1 + sum of p_{p-1}(p*k), k <= (p-1)/2, equals p, and
//   1 + sum of p_{p-1}(a + p*k), k <= (p-1)/2 - 1, equals 0 for 1 <= a <= p-1.
// True iff every equality holds. Requires odd n >= 3.
bool prime_test(std::uint64_t n);

// Sweeps prime_test over odd 3..n_max against trial division.
VerificationReport verify_prime_test(std::uint64_t n_max, int jobs = 1);

/// Odd n in [3, n_max] accepted by prime_test, each verdict cross-checked
/// against trial division; disagreements land in the report.
struct PrimeListing {
  std::vector<std::uint64_t> primes;
  VerificationReport report;
};

PrimeListing list_primes(std::uint64_t n_max, int jobs = 1);

/// Leading coefficients of a formal power series; accessors are bounds-checked
/// against the stated truncation order.
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries(std::vector<BigInt> coefficients, std::uint64_t order);

  std::uint64_t truncation_order() const { return order_; }
  const BigInt& coeff(std::uint64_t k) const;  // throws std::out_of_range past the order
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

 private:
  std::vector<BigInt> coefficients_;
  std::uint64_t order_;
};

// N_n(k) for k = 0..order: the expansion of
// (-1)^(n-1) * prod_{i=1}^{n-1}(1 - q^i) / (1 - q^n).
TruncatedPowerSeries generating_series(std::uint64_t n, std::uint64_t order);

// Ns(a, n) read off the generating series: N_n((n-1)(n-2)/2 + a - 1), a >= 1.
// Builds the series to exactly the required order.
BigInt corollary3_ns(std::uint64_t a, std::uint64_t n);

// Compares corollary3_ns with Ns for 1 <= n <= n_max, 1 <= a <= 2n.
VerificationReport verify_corollary3(std::uint64_t n_max, int jobs = 1);

}  // namespace nsfn
