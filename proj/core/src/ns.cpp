#include "nsfn/ns.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace nsfn {

std::int64_t ns(std::uint64_t a, std::uint64_t n) {
  const std::uint64_t g = gcd(a, n);
  const std::uint64_t n1 = n / g;
  const int mu = mobius(n1);
  if (mu == 0) {
    return 0;  // no division ever happens on the zero path
  }
  const std::uint64_t phi_n = euler_phi(n);
  const std::uint64_t phi_n1 = euler_phi(n1);
  assert(phi_n % phi_n1 == 0);
  return mu * static_cast<std::int64_t>(phi_n / phi_n1);
}

std::int64_t ns(std::uint64_t a, std::uint64_t n, const SieveTables& tables) {
  if (n == 0 || n > tables.limit()) {
    throw std::out_of_range("ns: n outside sieve range");
  }
  const std::uint64_t g = std::gcd(a, n);
  const std::uint64_t n1 = n / g;
  const int mu = tables.mu(n1);
  if (mu == 0) {
    return 0;
  }
  assert(tables.phi(n) % tables.phi(n1) == 0);
  return mu * static_cast<std::int64_t>(tables.phi(n) / tables.phi(n1));
}

std::int64_t ns_oracle(std::uint64_t a, std::uint64_t n) {
  const std::uint64_t g = gcd(a, n);
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(g)) {
    sum += static_cast<std::int64_t>(d) * mobius(n / d);
  }
  return sum;
}

std::vector<std::int64_t> ns_row(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("ns_row: n must be positive");
  }
  // Ns(a, n) depends on a only through (a, n), so one value per divisor
  // suffices.
  const std::vector<std::uint64_t> divs = divisors(n);
  const std::uint64_t phi_n = euler_phi(n);
  std::vector<std::int64_t> value_by_divisor(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::uint64_t n1 = n / divs[i];
    const int mu = mobius(n1);
    value_by_divisor[i] = mu == 0 ? 0 : mu * static_cast<std::int64_t>(phi_n / euler_phi(n1));
  }

  std::vector<std::int64_t> row(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    const std::uint64_t g = a == 0 ? n : std::gcd(a, n);
    const auto it = std::lower_bound(divs.begin(), divs.end(), g);
    row[a] = value_by_divisor[static_cast<std::size_t>(it - divs.begin())];
  }
  return row;
}

NsTable build_ns_table(std::uint64_t n_max) {
  if (n_max == 0) {
    throw std::domain_error("build_ns_table: n_max must be positive");
  }
  NsTable table;
  table.n_max = n_max;
  table.rows.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    table.rows.push_back(ns_row(n));
  }
  return table;
}

}  // namespace nsfn
