#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nsfn {

/// A value attached to a report: an integer bound, a tolerance, a label, or a
/// small integer set (e.g. the exponents a sweep covered).
using ReportValue = std::variant<std::int64_t, double, std::string, std::vector<std::int64_t>>;

using NamedValues = std::vector<std::pair<std::string, ReportValue>>;

/// One failing case of an identity sweep: the inputs that produced it and the
/// exact expected/actual values rendered in decimal.
struct Counterexample {
  NamedValues inputs;
  std::string expected;
  std::string actual;
};

/// Outcome of sweeping one identity over a parameter range. Counterexamples
/// are merged in ascending input order regardless of worker count, so equal
/// configurations serialize to identical bytes.
struct VerificationReport {
  std::string identity;
  NamedValues range;
  std::uint64_t cases_checked = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

// Process exit convention: 0 pass, 1 counterexample found.
inline int report_exit_code(const VerificationReport& report) { return report.pass() ? 0 : 1; }

}  // namespace nsfn
