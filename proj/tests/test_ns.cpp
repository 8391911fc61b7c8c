#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "nsfn/ns.hpp"

TEST_CASE("ns boundary specializations from the definition") {
  CHECK(nsfn::ns(6, 6) == 2);   // (a, n) = n gives phi(n)
  CHECK(nsfn::ns(1, 4) == 0);   // (a, n) = 1 gives mu(n), mu(4) = 0
  CHECK(nsfn::ns(2, 4) == -2);  // mu(4) + 2 mu(2) by the divisor-sum oracle
  CHECK(nsfn::ns(3, 9) == -3);  // mu(9) + 3 mu(3)
  CHECK(nsfn::ns(0, 1) == 1);
  CHECK_THROWS_AS(nsfn::ns(1, 0), std::domain_error);
}

TEST_CASE("ns_oracle examples") {
  CHECK(nsfn::ns_oracle(0, 12) == 4);  // equals phi(12)
  // direct summation over divisors of 12
  std::int64_t direct = 0;
  for (std::uint64_t d : nsfn::divisors(12)) {
    direct += static_cast<std::int64_t>(d) * nsfn::mobius(12 / d);
  }
  CHECK(direct == 4);

  CHECK(nsfn::ns_oracle(1, 30) == -1);  // only d = 1 survives, mu(30)
  CHECK(nsfn::ns_oracle(2, 4) == -2);
}

TEST_CASE("closed form equals the divisor-sum oracle") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    for (std::uint64_t a = 0; a <= 400; ++a) {
      REQUIRE(nsfn::ns(a, n) == nsfn::ns_oracle(a, n));
    }
  }
}

TEST_CASE("sieve-backed ns agrees with the factorization path") {
  const nsfn::SieveTables tables = nsfn::build_sieve(500);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::uint64_t a = 0; a <= 60; ++a) {
      REQUIRE(nsfn::ns(a, n, tables) == nsfn::ns(a, n));
    }
  }
  CHECK_THROWS_AS(nsfn::ns(1, 501, tables), std::out_of_range);
  CHECK_THROWS_AS(nsfn::ns(1, 0, tables), std::out_of_range);
}

TEST_CASE("periodicity in a with period n") {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    for (std::uint64_t a = 0; a <= 2 * n; ++a) {
      REQUIRE(nsfn::ns(a + n, n) == nsfn::ns(a, n));
    }
  }
}

TEST_CASE("specialization sweeps: n | a gives phi, coprime a gives mu") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto phi = static_cast<std::int64_t>(nsfn::euler_phi(n));
    CHECK(nsfn::ns(0, n) == phi);
    CHECK(nsfn::ns(n, n) == phi);
    CHECK(nsfn::ns(2 * n, n) == phi);
    CHECK(nsfn::ns(1, n) == nsfn::mobius(n));
    CHECK(nsfn::ns(n + 1, n) == nsfn::mobius(n));
  }
}

TEST_CASE("multiplicativity in n for coprime factors") {
  for (std::uint64_t n1 = 1; n1 <= 100; ++n1) {
    for (std::uint64_t n2 = 1; n2 <= 100; ++n2) {
      if (std::gcd(n1, n2) != 1) {
        continue;
      }
      for (std::uint64_t a : {0ULL, 1ULL, 2ULL, 3ULL, 5ULL, 8ULL, 13ULL, 30ULL, 97ULL}) {
        REQUIRE(nsfn::ns(a, n1 * n2) == nsfn::ns(a, n1) * nsfn::ns(a, n2));
      }
    }
  }
}

TEST_CASE("value bound |Ns(a,n)| <= phi(n)") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto phi = static_cast<std::int64_t>(nsfn::euler_phi(n));
    for (std::uint64_t a = 0; a <= n; ++a) {
      REQUIRE(std::abs(nsfn::ns(a, n)) <= phi);
    }
  }
}

TEST_CASE("ns_row examples") {
  CHECK(nsfn::ns_row(1) == std::vector<std::int64_t>{1});
  CHECK(nsfn::ns_row(3) == std::vector<std::int64_t>{2, -1, -1});
  CHECK(nsfn::ns_row(4) == std::vector<std::int64_t>{2, 0, -2, 0});
  CHECK_THROWS_AS(nsfn::ns_row(0), std::domain_error);
}

TEST_CASE("ns_row agrees with pointwise evaluation") {
  for (std::uint64_t n = 1; n <= 600; ++n) {
    const std::vector<std::int64_t> row = nsfn::ns_row(n);
    REQUIRE(row.size() == n);
    for (std::uint64_t a = 0; a < n; ++a) {
      REQUIRE(row[a] == nsfn::ns(a, n));
    }
  }
  // full contract range against the sieve-backed path
  const nsfn::SieveTables tables = nsfn::build_sieve(2000);
  for (std::uint64_t n = 601; n <= 2000; ++n) {
    const std::vector<std::int64_t> row = nsfn::ns_row(n);
    REQUIRE(row.size() == n);
    for (std::uint64_t a = 0; a < n; ++a) {
      REQUIRE(row[a] == nsfn::ns(a, n, tables));
    }
  }
}

TEST_CASE("ns table shape") {
  const nsfn::NsTable table = nsfn::build_ns_table(50);
  CHECK(table.n_max == 50);
  REQUIRE(table.rows.size() == 50);
  for (std::uint64_t n = 1; n <= 50; ++n) {
    REQUIRE(table.row(n).size() == n);
    CHECK(table.row(n)[0] == static_cast<std::int64_t>(nsfn::euler_phi(n)));
  }
  CHECK_THROWS_AS(nsfn::build_ns_table(0), std::domain_error);
}
