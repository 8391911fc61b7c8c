#pragma once

#include <cstdint>
#include <vector>

#include "nsfn/arith.hpp"

namespace nsfn {

// Ns(a, n) = phi(n) * mu(n / (a,n)) / phi(n / (a,n)).
//
// Always an exact integer: when n/(a,n) is squarefree phi(n/(a,n)) divides
// phi(n), and otherwise mu vanishes and the value is 0 before any division.
// Specializes to phi(n) when n | a and to mu(n) when (a, n) = 1; periodic in a
// with period n; |Ns(a, n)| <= phi(n).
std::int64_t ns(std::uint64_t a, std::uint64_t n);

// Same value through sieve lookups; requires n <= tables.limit().
std::int64_t ns(std::uint64_t a, std::uint64_t n, const SieveTables& tables);

// Independent cross-check: sum over d | (a, n) of d * mu(n / d).
std::int64_t ns_oracle(std::uint64_t a, std::uint64_t n);

// [Ns(0, n), ..., Ns(n-1, n)]. One value per divisor of n is computed and the
// row is filled through gcd lookups, so a full row costs far less than n
// independent factorizations.
std::vector<std::int64_t> ns_row(std::uint64_t n);

/// Rows 1..n_max of the Ns table; row n holds exactly n entries and starts
/// with Ns(0, n) = phi(n). Immutable once built.
struct NsTable {
  std::uint64_t n_max = 0;
  std::vector<std::vector<std::int64_t>> rows;  // rows[n - 1]

  const std::vector<std::int64_t>& row(std::uint64_t n) const { return rows.at(n - 1); }
};

NsTable build_ns_table(std::uint64_t n_max);

}  // namespace nsfn
