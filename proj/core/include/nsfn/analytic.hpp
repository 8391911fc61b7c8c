#pragma once

#include <cstdint>

#include "nsfn/arith.hpp"
#include "nsfn/report.hpp"

namespace nsfn {

/// One partial-sum check of the series sum_m Ns(a, m)/m^2 against its exact
/// target (6/pi^2) * sigma(-1, a).
struct SeriesCheck {
  std::uint64_t a = 0;
  std::uint64_t cutoff = 0;
  double partial_sum = 0.0;
  double target = 0.0;
  double residual = 0.0;  // |partial_sum - target|
  double tolerance = 0.0;
  bool passed = false;
};

// sum_{m=1}^{cutoff} Ns(a, m)/m^2, accumulated in ascending m. a = 0 is a
// domain error (every positive integer divides 0, so the target diverges).
double dirichlet_partial(std::uint64_t a, std::uint64_t cutoff);
double dirichlet_partial(std::uint64_t a, std::uint64_t cutoff, const SieveTables& tables);

// Populates a SeriesCheck; the target is computed from the exact rational
// sigma(-1, a) and converted to double last. tolerance <= 0 is rejected.
SeriesCheck dirichlet_check(std::uint64_t a, std::uint64_t cutoff, double tolerance);
SeriesCheck dirichlet_check(std::uint64_t a, std::uint64_t cutoff, double tolerance,
                            const SieveTables& tables);

// sum_{m=1}^{cutoff} mu(m)/m^2 — the classical series whose product with
// zeta(2) tends to 1; the (a, m) = 1 specialization of the Ns series.
double mobius_series_partial(std::uint64_t cutoff);
double mobius_series_partial(std::uint64_t cutoff, const SieveTables& tables);

// Checks dirichlet_check for every 1 <= a <= a_max, plus the classical
// mu-series case |zeta(2) * partial - 1| <= tolerance.
VerificationReport verify_dirichlet(std::uint64_t a_max, std::uint64_t cutoff, double tolerance);

}  // namespace nsfn
