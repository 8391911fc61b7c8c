#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nsfn/arith.hpp"

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("gcd convention and domain") {
  CHECK(nsfn::gcd(0, 5) == 5);
  CHECK(nsfn::gcd(12, 18) == 6);
  CHECK(nsfn::gcd(7, 13) == 1);
  CHECK_THROWS_AS(nsfn::gcd(3, 0), std::domain_error);
}

TEST_CASE("factorize canonical examples") {
  CHECK(nsfn::factorize(1).factors.empty());

  const nsfn::Factorization twelve = nsfn::factorize(12);
  REQUIRE(twelve.factors.size() == 2);
  CHECK(twelve.factors[0] == nsfn::Factorization::PrimePower{2, 2});
  CHECK(twelve.factors[1] == nsfn::Factorization::PrimePower{3, 1});

  const nsfn::Factorization p = nsfn::factorize(97);
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0] == nsfn::Factorization::PrimePower{97, 1});

  CHECK_THROWS_AS(nsfn::factorize(0), std::domain_error);
}

TEST_CASE("factorize invariants over a range") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const nsfn::Factorization f = nsfn::factorize(n);
    CHECK(f.value() == n);
    std::uint64_t prev = 0;
    for (const auto& [prime, exponent] : f.factors) {
      CHECK(prime > prev);
      CHECK(exponent >= 1);
      CHECK(trial_division_prime(prime));
      prev = prime;
    }
  }
}

TEST_CASE("euler_phi and mobius examples") {
  CHECK(nsfn::euler_phi(1) == 1);
  CHECK(nsfn::euler_phi(6) == 2);
  CHECK(nsfn::euler_phi(12) == 4);
  CHECK(nsfn::mobius(1) == 1);
  CHECK(nsfn::mobius(12) == 0);
  CHECK(nsfn::mobius(30) == -1);
}

TEST_CASE("divisors examples and sigma(0) count") {
  CHECK(nsfn::divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(nsfn::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(nsfn::divisors(9) == std::vector<std::uint64_t>{1, 3, 9});

  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto divs = nsfn::divisors(n);
    REQUIRE(!divs.empty());
    CHECK(divs.front() == 1);
    CHECK(divs.back() == n);
    CHECK(std::is_sorted(divs.begin(), divs.end()));
    CHECK(nsfn::sigma(0, n) == nsfn::Rational(static_cast<long>(divs.size())));
  }
}

TEST_CASE("sigma at s = 1, 0, -1") {
  CHECK(nsfn::sigma(1, 4) == nsfn::Rational(7));
  CHECK(nsfn::sigma(0, 4) == nsfn::Rational(3));

  // direct-summation oracle for the reciprocal case: 1 + 1/2 + 1/4
  nsfn::Rational expected(0);
  for (std::uint64_t d : nsfn::divisors(4)) {
    expected += nsfn::make_rational(1, static_cast<std::int64_t>(d));
  }
  CHECK(expected == nsfn::make_rational(7, 4));
  CHECK(nsfn::sigma(-1, 4) == nsfn::make_rational(7, 4));

  // sigma(-1, n) == sigma(1, n) / n, n <= 300
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(nsfn::sigma(-1, n) ==
          nsfn::sigma(1, n) / nsfn::Rational(static_cast<long>(n)));
  }
}

TEST_CASE("multiplicativity of phi and mu on coprime pairs") {
  const nsfn::SieveTables tables = nsfn::build_sieve(1000 * 1000);
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      if (std::gcd(m, n) != 1) {
        continue;
      }
      REQUIRE(tables.phi(m * n) == tables.phi(m) * tables.phi(n));
      REQUIRE(tables.mu(m * n) == tables.mu(m) * tables.mu(n));
    }
  }
}

TEST_CASE("mobius divisor sums collapse to the unit impulse") {
  const nsfn::SieveTables tables = nsfn::build_sieve(10000);
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    int sum = 0;
    for (std::uint64_t l : nsfn::divisors(k)) {
      sum += tables.mu(l);
    }
    REQUIRE(sum == (k == 1 ? 1 : 0));
  }
}

TEST_CASE("phi divisor sums reproduce n") {
  const nsfn::SieveTables tables = nsfn::build_sieve(10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : nsfn::divisors(n)) {
      sum += tables.phi(d);
    }
    REQUIRE(sum == n);
  }
}

TEST_CASE("sieve tables agree with per-value operations") {
  const std::uint64_t limit = 5000;
  const nsfn::SieveTables tables = nsfn::build_sieve(limit);
  CHECK(tables.limit() == limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    REQUIRE(tables.phi(n) == nsfn::euler_phi(n));
    REQUIRE(tables.mu(n) == nsfn::mobius(n));
    if (n >= 2) {
      REQUIRE(tables.smallest_prime_factor(n) == nsfn::factorize(n).factors.front().prime);
      REQUIRE(tables.is_prime(n) == trial_division_prime(n));
    }
  }
}

TEST_CASE("sieve examples and errors") {
  const nsfn::SieveTables small = nsfn::build_sieve(10);
  CHECK(small.phi(10) == 4);
  CHECK(small.mu(10) == 1);
  CHECK(nsfn::build_sieve(1).phi(1) == 1);
  CHECK_THROWS_AS(nsfn::build_sieve(0), std::domain_error);
  CHECK_THROWS_AS(small.phi(11), std::out_of_range);
  CHECK_THROWS_AS(small.phi(0), std::out_of_range);
}

TEST_CASE("distinct_prime_count") {
  CHECK(nsfn::distinct_prime_count(1) == 0);
  CHECK(nsfn::distinct_prime_count(12) == 2);
  CHECK(nsfn::distinct_prime_count(30) == 3);
}
