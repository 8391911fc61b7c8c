#pragma once

#include <cstdint>
#include <vector>

#include "nsfn/rational.hpp"

namespace nsfn {

/// Canonical prime-power decomposition, ascending by prime.
/// The empty factor list represents 1.
struct Factorization {
  struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    bool operator==(const PrimePower&) const = default;
  };

  std::vector<PrimePower> factors;

  std::uint64_t value() const;  // product of prime^exponent
  std::size_t distinct_primes() const { return factors.size(); }

  bool operator==(const Factorization&) const = default;
};

// gcd(a, n) with the convention gcd(0, n) = n. n = 0 is a domain error.
std::uint64_t gcd(std::uint64_t a, std::uint64_t n);

// Trial division up to sqrt(n); deterministic. n = 0 is a domain error.
Factorization factorize(std::uint64_t n);

// Count of 1 <= k <= n coprime to n.
std::uint64_t euler_phi(std::uint64_t n);

// 0 when n has a squared prime factor, else (-1)^(number of prime factors).
int mobius(std::uint64_t n);

// Number of distinct prime divisors (omega).
std::uint32_t distinct_prime_count(std::uint64_t n);

// All divisors of n, ascending; first element 1, last element n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// sum over d | n of d^s, exact. Integer-valued for s >= 0 (e.g. sigma(0, n) is
// the divisor count, sigma(1, n) the divisor sum); a proper fraction for s < 0.
Rational sigma(int s, std::uint64_t n);

/// Linear-sieve tables for batch phi / mu / factoring lookups over [1, limit].
/// Immutable after construction; safe to share across threads.
class SieveTables {
 public:
  std::uint64_t limit() const { return limit_; }
  std::uint64_t phi(std::uint64_t n) const { return phi_[checked(n)]; }
  int mu(std::uint64_t n) const { return mu_[checked(n)]; }
  std::uint32_t smallest_prime_factor(std::uint64_t n) const { return spf_[checked(n)]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[checked(n)] == n; }

 private:
  friend SieveTables build_sieve(std::uint64_t limit);

  std::size_t checked(std::uint64_t n) const;

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> spf_;
};

// O(limit) smallest-prime-factor sieve. limit = 0 is a domain error.
SieveTables build_sieve(std::uint64_t limit);

}  // namespace nsfn
