#include "nsfn/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nsfn/ns.hpp"
#include "nsfn/report_io.hpp"

namespace nsfn {

namespace {

void check_series_domain(std::uint64_t a, std::uint64_t cutoff) {
  if (a == 0) {
    throw std::domain_error("dirichlet series: a must be positive (sigma(-1, 0) is undefined)");
  }
  if (cutoff == 0) {
    throw std::domain_error("dirichlet series: cutoff must be positive");
  }
}

double six_over_pi_squared() {
  static const double value = 6.0 / (std::numbers::pi * std::numbers::pi);
  return value;
}

}  // namespace

double dirichlet_partial(std::uint64_t a, std::uint64_t cutoff, const SieveTables& tables) {
  check_series_domain(a, cutoff);
  if (cutoff > tables.limit()) {
    throw std::out_of_range("dirichlet_partial: cutoff exceeds sieve limit");
  }
  double sum = 0.0;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    const std::int64_t value = ns(a, m, tables);
    if (value != 0) {
      sum += static_cast<double>(value) / (static_cast<double>(m) * static_cast<double>(m));
    }
  }
  return sum;
}

double dirichlet_partial(std::uint64_t a, std::uint64_t cutoff) {
  check_series_domain(a, cutoff);
  return dirichlet_partial(a, cutoff, build_sieve(cutoff));
}

SeriesCheck dirichlet_check(std::uint64_t a, std::uint64_t cutoff, double tolerance,
                            const SieveTables& tables) {
  if (tolerance <= 0.0) {
    throw std::domain_error("dirichlet_check: tolerance must be positive");
  }
  check_series_domain(a, cutoff);

  SeriesCheck check;
  check.a = a;
  check.cutoff = cutoff;
  check.tolerance = tolerance;
  check.partial_sum = dirichlet_partial(a, cutoff, tables);
  // exact rational first, double conversion last
  check.target = six_over_pi_squared() * to_double(sigma(-1, a));
  check.residual = std::abs(check.partial_sum - check.target);
  check.passed = check.residual <= tolerance;
  return check;
}

SeriesCheck dirichlet_check(std::uint64_t a, std::uint64_t cutoff, double tolerance) {
  if (tolerance <= 0.0) {
    throw std::domain_error("dirichlet_check: tolerance must be positive");
  }
  check_series_domain(a, cutoff);
  return dirichlet_check(a, cutoff, tolerance, build_sieve(cutoff));
}

double mobius_series_partial(std::uint64_t cutoff, const SieveTables& tables) {
  if (cutoff == 0) {
    throw std::domain_error("mobius_series_partial: cutoff must be positive");
  }
  if (cutoff > tables.limit()) {
    throw std::out_of_range("mobius_series_partial: cutoff exceeds sieve limit");
  }
  double sum = 0.0;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    const int mu = tables.mu(m);
    if (mu != 0) {
      sum += static_cast<double>(mu) / (static_cast<double>(m) * static_cast<double>(m));
    }
  }
  return sum;
}

double mobius_series_partial(std::uint64_t cutoff) {
  if (cutoff == 0) {
    throw std::domain_error("mobius_series_partial: cutoff must be positive");
  }
  return mobius_series_partial(cutoff, build_sieve(cutoff));
}

VerificationReport verify_dirichlet(std::uint64_t a_max, std::uint64_t cutoff, double tolerance) {
  if (a_max == 0) {
    throw std::domain_error("verify_dirichlet: a_max must be positive");
  }
  const SieveTables tables = build_sieve(cutoff);

  VerificationReport report;
  report.identity = "dirichlet";
  report.range = {{"a_max", static_cast<std::int64_t>(a_max)},
                  {"cutoff", static_cast<std::int64_t>(cutoff)},
                  {"tolerance", tolerance}};

  for (std::uint64_t a = 1; a <= a_max; ++a) {
    const SeriesCheck check = dirichlet_check(a, cutoff, tolerance, tables);
    ++report.cases_checked;
    if (!check.passed) {
      report.counterexamples.push_back(
          Counterexample{{{"a", static_cast<std::int64_t>(a)},
                          {"cutoff", static_cast<std::int64_t>(cutoff)},
                          {"residual", check.residual}},
                         format_double(check.target), format_double(check.partial_sum)});
    }
  }

  // Classical analog: zeta(2) * sum mu(m)/m^2 -> 1.
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double mu_product = zeta2 * mobius_series_partial(cutoff, tables);
  ++report.cases_checked;
  if (std::abs(mu_product - 1.0) > tolerance) {
    report.counterexamples.push_back(Counterexample{{{"series", std::string("mu")},
                                                     {"cutoff", static_cast<std::int64_t>(cutoff)},
                                                     {"residual", std::abs(mu_product - 1.0)}},
                                                    "1", format_double(mu_product)});
  }
  return report;
}

}  // namespace nsfn
