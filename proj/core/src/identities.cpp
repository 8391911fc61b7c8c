#include "nsfn/identities.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chunked.hpp"
#include "nsfn/arith.hpp"
#include "nsfn/ns.hpp"

namespace nsfn {

namespace {

std::int64_t pow2(std::uint32_t k) { return std::int64_t{1} << k; }

Counterexample make_ce(NamedValues inputs, std::string expected, std::string actual) {
  return Counterexample{std::move(inputs), std::move(expected), std::move(actual)};
}

}  // namespace

std::int64_t theorem1_sum(std::uint64_t a, std::uint64_t n) {
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += ns(a, d);
  }
  return sum;
}

std::int64_t theorem1_abs_sum(std::uint64_t a, std::uint64_t n) {
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += std::abs(ns(a, d));
  }
  return sum;
}

InversionSides invert(const ArithmeticFunction& f, std::uint64_t a, std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("invert: n must be positive");
  }
  std::int64_t lhs = 0;
  for (std::uint64_t d : divisors(gcd(a, n))) {
    lhs += f(n / d) * static_cast<std::int64_t>(d);
  }

  const auto g = [&f](std::uint64_t x) {
    std::int64_t sum = 0;
    for (std::uint64_t t : divisors(x)) {
      sum += f(t);
    }
    return sum;
  };
  std::int64_t rhs = 0;
  for (std::uint64_t d : divisors(n)) {
    rhs += ns(a, d) * g(n / d);
  }
  return {lhs, rhs};
}

namespace {

// Generous bound; the identity sweeps use |m| <= 4 and exact powers explode
// in size long before this limit.
void check_exponent(int m) {
  if (m > 256 || m < -256) {
    throw std::domain_error("theorem3: |m| exceeds the supported bound of 256");
  }
}

}  // namespace

Rational theorem3_lhs(std::uint64_t n, int m) {
  if (n == 0) {
    throw std::domain_error("theorem3_lhs: n must be positive");
  }
  check_exponent(m);
  Rational total(0);
  for (std::uint64_t a = 1; a <= n; ++a) {
    const std::uint64_t n1 = n / std::gcd(a, n);
    if (mobius(n1) == 0) {
      continue;  // excluded term; contributes 0 for every m
    }
    total += rational_pow(Rational(static_cast<long>(ns(a, n))), m);
  }
  return total;
}

Rational theorem3_rhs(std::uint64_t n, int m) {
  if (n == 0) {
    throw std::domain_error("theorem3_rhs: n must be positive");
  }
  check_exponent(m);
  Rational result = rational_pow(Rational(static_cast<long>(euler_phi(n))), m);
  for (const auto& [p, e] : factorize(n).factors) {
    const Rational one_minus_p(static_cast<long>(1) - static_cast<long>(p));
    result *= Rational(1) - rational_pow(one_minus_p, -(m - 1));
  }
  return result;
}

RowSums row_sums(std::uint64_t n) {
  const std::vector<std::int64_t> row = ns_row(n);
  std::int64_t signed_sum = 0;
  std::int64_t absolute_sum = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const std::int64_t v = row[a % n];  // a = n wraps to the a = 0 entry, phi(n)
    signed_sum += v;
    absolute_sum += std::abs(v);
  }
  return {signed_sum, absolute_sum};
}

VerificationReport verify_theorem1(std::uint64_t n_max, std::uint64_t a_max, int jobs) {
  if (n_max == 0) {
    throw std::domain_error("verify_theorem1: n_max must be positive");
  }
  const SieveTables tables = build_sieve(n_max);
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const std::vector<std::uint64_t> divs = divisors(n);
      for (std::uint64_t a = 0; a <= a_max; ++a) {
        std::int64_t sum = 0;
        for (std::uint64_t d : divs) {
          sum += ns(a, d, tables);
        }
        const std::int64_t expected = a % n == 0 ? static_cast<std::int64_t>(n) : 0;
        if (sum != expected) {
          buckets[n - 1].push_back(make_ce({{"a", static_cast<std::int64_t>(a)},
                                            {"n", static_cast<std::int64_t>(n)}},
                                           std::to_string(expected), std::to_string(sum)));
        }
      }
    }
  });

  VerificationReport report;
  report.identity = "theorem1";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"a_max", static_cast<std::int64_t>(a_max)}};
  report.cases_checked = n_max * (a_max + 1);
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

VerificationReport verify_theorem1_abs(std::uint64_t n_max, std::uint64_t a_max, int jobs) {
  if (n_max == 0) {
    throw std::domain_error("verify_theorem1_abs: n_max must be positive");
  }
  const SieveTables tables = build_sieve(n_max);
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const std::vector<std::uint64_t> divs = divisors(n);
      for (std::uint64_t a = 0; a <= a_max; ++a) {
        std::int64_t sum = 0;
        for (std::uint64_t d : divs) {
          sum += std::abs(ns(a, d, tables));
        }
        const std::uint64_t g = gcd(a, n);
        const std::int64_t expected =
            static_cast<std::int64_t>(g) * pow2(distinct_prime_count(n / g));
        if (sum != expected) {
          buckets[n - 1].push_back(make_ce({{"a", static_cast<std::int64_t>(a)},
                                            {"n", static_cast<std::int64_t>(n)}},
                                           std::to_string(expected), std::to_string(sum)));
        }
      }
    }
  });

  VerificationReport report;
  report.identity = "theorem1-abs";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"a_max", static_cast<std::int64_t>(a_max)}};
  report.cases_checked = n_max * (a_max + 1);
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

VerificationReport verify_theorem2(std::uint64_t n_max) {
  if (n_max == 0) {
    throw std::domain_error("verify_theorem2: n_max must be positive");
  }

  struct NamedFunction {
    const char* name;
    ArithmeticFunction fn;
  };
  const std::array<NamedFunction, 5> functions{{
      {"one", [](std::uint64_t) -> std::int64_t { return 1; }},
      {"id", [](std::uint64_t d) { return static_cast<std::int64_t>(d); }},
      {"square", [](std::uint64_t d) { return static_cast<std::int64_t>(d * d); }},
      {"mobius", [](std::uint64_t d) -> std::int64_t { return mobius(d); }},
      {"phi", [](std::uint64_t d) { return static_cast<std::int64_t>(euler_phi(d)); }},
  }};

  VerificationReport report;
  report.identity = "theorem2";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"a_set", std::string("0 1 n/2 n n+3")}};

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::array<std::uint64_t, 5> a_set{0, 1, n / 2, n, n + 3};
    for (const auto& [name, f] : functions) {
      for (std::uint64_t a : a_set) {
        const InversionSides sides = invert(f, a, n);
        ++report.cases_checked;
        if (sides.lhs != sides.rhs) {
          report.counterexamples.push_back(make_ce({{"f", std::string(name)},
                                                    {"a", static_cast<std::int64_t>(a)},
                                                    {"n", static_cast<std::int64_t>(n)}},
                                                   std::to_string(sides.lhs),
                                                   std::to_string(sides.rhs)));
        }
      }
    }

    // Specialization (a, n) = 1: f(n) = sum over d | n of mu(d) g(n/d),
    // the first Moebius inversion formula.
    for (const auto& [name, f] : functions) {
      std::int64_t recovered = 0;
      for (std::uint64_t d : divisors(n)) {
        std::int64_t g = 0;
        for (std::uint64_t t : divisors(n / d)) {
          g += f(t);
        }
        recovered += mobius(d) * g;
      }
      ++report.cases_checked;
      if (recovered != f(n)) {
        report.counterexamples.push_back(make_ce({{"f", std::string(name)},
                                                  {"n", static_cast<std::int64_t>(n)},
                                                  {"check", std::string("mobius-inversion")}},
                                                 std::to_string(f(n)),
                                                 std::to_string(recovered)));
      }
    }

    // Specializations (a, n) = n: n d(n) = sum phi(d) S(n/d) and
    // S(n) = sum phi(d) d(n/d).
    const std::vector<std::uint64_t> divs = divisors(n);
    const auto divisor_count = [](std::uint64_t x) {
      return static_cast<std::int64_t>(divisors(x).size());
    };
    const auto divisor_sum = [](std::uint64_t x) {
      std::int64_t s = 0;
      for (std::uint64_t d : divisors(x)) {
        s += static_cast<std::int64_t>(d);
      }
      return s;
    };
    std::int64_t phi_conv_sum = 0;   // sum phi(d) S(n/d)
    std::int64_t phi_conv_count = 0; // sum phi(d) d(n/d)
    for (std::uint64_t d : divs) {
      const auto phi_d = static_cast<std::int64_t>(euler_phi(d));
      phi_conv_sum += phi_d * divisor_sum(n / d);
      phi_conv_count += phi_d * divisor_count(n / d);
    }
    const std::int64_t n_times_d = static_cast<std::int64_t>(n) * divisor_count(n);
    ++report.cases_checked;
    if (phi_conv_sum != n_times_d) {
      report.counterexamples.push_back(
          make_ce({{"n", static_cast<std::int64_t>(n)}, {"check", std::string("n*d(n)")}},
                  std::to_string(n_times_d), std::to_string(phi_conv_sum)));
    }
    ++report.cases_checked;
    if (phi_conv_count != divisor_sum(n)) {
      report.counterexamples.push_back(
          make_ce({{"n", static_cast<std::int64_t>(n)}, {"check", std::string("S(n)")}},
                  std::to_string(divisor_sum(n)), std::to_string(phi_conv_count)));
    }
  }
  return report;
}

VerificationReport verify_theorem3(std::uint64_t n_max, const std::vector<int>& m_set) {
  if (n_max == 0) {
    throw std::domain_error("verify_theorem3: n_max must be positive");
  }
  VerificationReport report;
  report.identity = "theorem3";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"m_set", std::vector<std::int64_t>(m_set.begin(), m_set.end())}};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (int m : m_set) {
      const Rational lhs = theorem3_lhs(n, m);
      const Rational rhs = theorem3_rhs(n, m);
      ++report.cases_checked;
      if (lhs != rhs) {
        report.counterexamples.push_back(
            make_ce({{"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)}},
                    to_decimal(rhs), to_decimal(lhs)));
      }
    }
  }
  return report;
}

VerificationReport verify_row_sums(std::uint64_t n_max, int jobs) {
  if (n_max == 0) {
    throw std::domain_error("verify_row_sums: n_max must be positive");
  }
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const RowSums sums = row_sums(n);
      const std::int64_t expected_signed = n == 1 ? 1 : 0;
      const std::int64_t expected_abs =
          static_cast<std::int64_t>(euler_phi(n)) * pow2(distinct_prime_count(n));
      if (sums.signed_sum != expected_signed) {
        buckets[n - 1].push_back(
            make_ce({{"n", static_cast<std::int64_t>(n)}, {"sum", std::string("signed")}},
                    std::to_string(expected_signed), std::to_string(sums.signed_sum)));
      }
      if (sums.absolute_sum != expected_abs) {
        buckets[n - 1].push_back(
            make_ce({{"n", static_cast<std::int64_t>(n)}, {"sum", std::string("absolute")}},
                    std::to_string(expected_abs), std::to_string(sums.absolute_sum)));
      }
    }
  });

  VerificationReport report;
  report.identity = "row-sums";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)}};
  report.cases_checked = 2 * n_max;
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

}  // namespace nsfn
