#include "nsfn/qseries.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "chunked.hpp"
#include "nsfn/arith.hpp"
#include "nsfn/ns.hpp"

namespace nsfn {

namespace {

const BigInt kZero(0);

void check_product_param(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("poly_product: n must be positive");
  }
  if (n > kMaxProductParam) {
    throw std::length_error("poly_product: n exceeds the expansion ceiling of " +
                            std::to_string(kMaxProductParam));
  }
}

Counterexample conjecture_ce(std::uint64_t a, std::uint64_t n, const BigInt& expected,
                             const BigInt& actual) {
  return Counterexample{{{"a", static_cast<std::int64_t>(a)},
                         {"n", static_cast<std::int64_t>(n)}},
                        to_decimal(expected),
                        to_decimal(actual)};
}

// Sum of coefficients at a, a+n, a+2n, ... within [0, degree].
BigInt class_sum(const std::vector<BigInt>& coeffs, std::uint64_t a, std::uint64_t n) {
  BigInt sum(0);
  for (std::uint64_t k = a; k < coeffs.size(); k += n) {
    sum += coeffs[k];
  }
  return sum;
}

// Sum of coefficients at a + n*k for k = 0..k_max; every index must exist.
BigInt bounded_class_sum(const std::vector<BigInt>& coeffs, std::uint64_t a, std::uint64_t n,
                         std::uint64_t k_max) {
  BigInt sum(0);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    sum += coeffs.at(a + n * k);
  }
  return sum;
}

bool trial_division_is_prime(std::uint64_t n) {
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

// prime_test against a ready-made coefficient vector for prod_{i=1}^{n-1}.
bool prime_test_on(const std::vector<BigInt>& coeffs, std::uint64_t p) {
  const std::uint64_t half = (p - 1) / 2;
  if (BigInt(1) + bounded_class_sum(coeffs, 0, p, half) != BigInt(static_cast<long>(p))) {
    return false;
  }
  for (std::uint64_t a = 1; a <= p - 1; ++a) {
    if (BigInt(1) + bounded_class_sum(coeffs, a, p, half - 1) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("QPolynomial: empty coefficient vector");
  }
}

const BigInt& QPolynomial::coeff(std::uint64_t k) const {
  if (k >= coefficients_.size()) {
    throw std::out_of_range("QPolynomial::coeff: exponent past degree");
  }
  return coefficients_[k];
}

const BigInt& QPolynomial::coeff_or_zero(std::uint64_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : kZero;
}

void ProductExpander::advance() {
  // Multiply by (1 - q^n): coeff[k] -= coeff[k - n], descending so each source
  // is read before it is overwritten.
  const std::uint64_t shift = n_;
  const std::size_t old_size = coefficients_.size();
  coefficients_.resize(old_size + shift);
  for (std::size_t k = coefficients_.size(); k-- > shift;) {
    coefficients_[k] -= coefficients_[k - shift];
  }
  ++n_;
}

void ProductExpander::advance_to(std::uint64_t n) {
  if (n < n_) {
    throw std::domain_error("ProductExpander::advance_to: cannot rewind");
  }
  while (n_ < n) {
    advance();
  }
}

QPolynomial poly_product(std::uint64_t n) {
  check_product_param(n);
  ProductExpander expander;
  expander.advance_to(n);
  assert(expander.degree() == n * (n - 1) / 2);
  return QPolynomial(std::vector<BigInt>(expander.coefficients()));
}

BigInt residue_class_sum(const QPolynomial& product, std::uint64_t a, std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("residue_class_sum: n must be positive");
  }
  return class_sum(product.coefficients(), a, n);
}

BigInt theorem4_ns(std::uint64_t a, std::uint64_t n) {
  check_product_param(n);
  if (a >= n) {
    throw std::domain_error("theorem4_ns: a must lie in [0, n-1]; reduce mod n first");
  }
  const QPolynomial product = poly_product(n);
  const BigInt sum = class_sum(product.coefficients(), a, n);
  // The enumerated index set must match the closed-form upper bound
  // floor((n-1)/2 - a/n) = floor((n(n-1)/2 - a) / n); a <= degree always holds
  // for a < n.
  const std::uint64_t degree = n * (n - 1) / 2;
  if (sum != bounded_class_sum(product.coefficients(), a, n, (degree - a) / n)) {
    throw std::logic_error("theorem4_ns: index descriptions disagree");
  }
  return sum;
}

VerificationReport verify_theorem4(std::uint64_t n_max, int jobs) {
  check_product_param(n_max);
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    ProductExpander expander;
    expander.advance_to(lo);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const std::vector<std::int64_t> row = ns_row(n);
      for (std::uint64_t a = 0; a < n; ++a) {
        const BigInt sum = class_sum(expander.coefficients(), a, n);
        if (sum != row[a]) {
          buckets[n - 1].push_back(conjecture_ce(a, n, BigInt(static_cast<long>(row[a])), sum));
        }
      }
      expander.advance();
    }
  });

  VerificationReport report;
  report.identity = "theorem4";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"a_range", std::string("0..n-1")}};
  report.cases_checked = n_max * (n_max + 1) / 2;
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

BigInt corollary1_phi_sum(std::uint64_t n) {
  check_product_param(n);
  const QPolynomial product = poly_product(n);
  return bounded_class_sum(product.coefficients(), 0, n, (n - 1) / 2);
}

BigInt corollary1_mu_sum(std::uint64_t n) {
  check_product_param(n);
  if (n < 2) {
    throw std::domain_error("corollary1_mu_sum: undefined at n = 1 (empty index range)");
  }
  const QPolynomial product = poly_product(n);
  return bounded_class_sum(product.coefficients(), 1, n, (n - 2) / 2);
}

PhiMuSums corollary1_phi_mu(std::uint64_t n) {
  check_product_param(n);
  if (n < 2) {
    throw std::domain_error("corollary1_phi_mu: mu sum undefined at n = 1");
  }
  const QPolynomial product = poly_product(n);
  return {bounded_class_sum(product.coefficients(), 0, n, (n - 1) / 2),
          bounded_class_sum(product.coefficients(), 1, n, (n - 2) / 2)};
}

VerificationReport verify_corollary1(std::uint64_t n_max, int jobs) {
  check_product_param(n_max);
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    ProductExpander expander;
    expander.advance_to(lo);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const BigInt phi_sum = bounded_class_sum(expander.coefficients(), 0, n, (n - 1) / 2);
      if (phi_sum != BigInt(static_cast<long>(euler_phi(n)))) {
        buckets[n - 1].push_back(Counterexample{
            {{"n", static_cast<std::int64_t>(n)}, {"sum", std::string("phi")}},
            to_decimal(BigInt(static_cast<long>(euler_phi(n)))), to_decimal(phi_sum)});
      }
      if (n >= 2) {
        const BigInt mu_sum = bounded_class_sum(expander.coefficients(), 1, n, (n - 2) / 2);
        if (mu_sum != BigInt(mobius(n))) {
          buckets[n - 1].push_back(Counterexample{
              {{"n", static_cast<std::int64_t>(n)}, {"sum", std::string("mu")}},
              to_decimal(BigInt(mobius(n))), to_decimal(mu_sum)});
        }
      }
      expander.advance();
    }
  });

  VerificationReport report;
  report.identity = "corollary1";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)}};
  report.cases_checked = 2 * n_max - 1;  // phi sums from n = 1, mu sums from n = 2
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

bool prime_test(std::uint64_t n) {
  check_product_param(n);
  if (n < 3 || n % 2 == 0) {
    throw std::domain_error("prime_test: requires an odd n >= 3");
  }
  const QPolynomial product = poly_product(n);
  return prime_test_on(product.coefficients(), n);
}

VerificationReport verify_prime_test(std::uint64_t n_max, int jobs) {
  return list_primes(n_max, jobs).report;
}

PrimeListing list_primes(std::uint64_t n_max, int jobs) {
  check_product_param(n_max);
  if (n_max < 3) {
    throw std::domain_error("list_primes: n_max must be at least 3");
  }
  const std::uint64_t cases = (n_max - 1) / 2;  // odd n in [3, n_max]
  std::vector<std::vector<Counterexample>> buckets(cases);
  std::vector<std::uint8_t> accepted(cases, 0);

  detail::chunked_for(0, cases - 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    ProductExpander expander;
    expander.advance_to(2 * lo + 3);
    for (std::uint64_t i = lo; i <= hi; ++i) {
      const std::uint64_t n = 2 * i + 3;
      const bool claimed = prime_test_on(expander.coefficients(), n);
      const bool actual = trial_division_is_prime(n);
      accepted[i] = claimed ? 1 : 0;
      if (claimed != actual) {
        buckets[i].push_back(Counterexample{{{"n", static_cast<std::int64_t>(n)}},
                                            actual ? "prime" : "composite",
                                            claimed ? "prime" : "composite"});
      }
      if (i < hi) {
        expander.advance_to(n + 2);
      }
    }
  });

  PrimeListing listing;
  listing.report.identity = "prime-test";
  listing.report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                          {"n_range", std::string("odd 3..n_max")}};
  listing.report.cases_checked = cases;
  for (std::uint64_t i = 0; i < cases; ++i) {
    if (accepted[i]) {
      listing.primes.push_back(2 * i + 3);
    }
    listing.report.counterexamples.insert(listing.report.counterexamples.end(),
                                          buckets[i].begin(), buckets[i].end());
  }
  return listing;
}

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<BigInt> coefficients, std::uint64_t order)
    : coefficients_(std::move(coefficients)), order_(order) {
  if (coefficients_.size() != order_ + 1) {
    throw std::invalid_argument("TruncatedPowerSeries: length must equal order + 1");
  }
}

const BigInt& TruncatedPowerSeries::coeff(std::uint64_t k) const {
  if (k > order_) {
    throw std::out_of_range("TruncatedPowerSeries::coeff: index past truncation order");
  }
  return coefficients_[k];
}

TruncatedPowerSeries generating_series(std::uint64_t n, std::uint64_t order) {
  check_product_param(n);
  const QPolynomial product = poly_product(n);
  const bool negate = n % 2 == 0;  // (-1)^(n-1)

  // 1/(1 - q^n) folds into the recurrence u(k) = p_{n-1}(k) + u(k - n).
  std::vector<BigInt> coeffs(order + 1);
  for (std::uint64_t k = 0; k <= order; ++k) {
    coeffs[k] = product.coeff_or_zero(k);
    if (k >= n) {
      coeffs[k] += coeffs[k - n];
    }
  }
  if (negate) {
    for (BigInt& c : coeffs) {
      c = -c;
    }
  }
  return TruncatedPowerSeries(std::move(coeffs), order);
}

BigInt corollary3_ns(std::uint64_t a, std::uint64_t n) {
  check_product_param(n);
  if (a == 0) {
    throw std::domain_error("corollary3_ns: requires a >= 1");
  }
  const std::uint64_t index = (n >= 2 ? (n - 1) * (n - 2) / 2 : 0) + a - 1;
  return generating_series(n, index).coeff(index);
}

VerificationReport verify_corollary3(std::uint64_t n_max, int jobs) {
  check_product_param(n_max);
  std::vector<std::vector<Counterexample>> buckets(n_max);

  detail::chunked_for(1, n_max, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const std::uint64_t max_index = (n >= 2 ? (n - 1) * (n - 2) / 2 : 0) + 2 * n - 1;
      const TruncatedPowerSeries series = generating_series(n, max_index);
      const std::vector<std::int64_t> row = ns_row(n);
      for (std::uint64_t a = 1; a <= 2 * n; ++a) {
        const std::uint64_t index = (n >= 2 ? (n - 1) * (n - 2) / 2 : 0) + a - 1;
        const BigInt& actual = series.coeff(index);
        const BigInt expected(static_cast<long>(row[a % n]));
        if (actual != expected) {
          buckets[n - 1].push_back(conjecture_ce(a, n, expected, actual));
        }
      }
    }
  });

  VerificationReport report;
  report.identity = "corollary3";
  report.range = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"a_range", std::string("1..2n")}};
  report.cases_checked = n_max * (n_max + 1);  // sum over n of 2n
  for (auto& bucket : buckets) {
    report.counterexamples.insert(report.counterexamples.end(), bucket.begin(), bucket.end());
  }
  return report;
}

}  // namespace nsfn
