#pragma once

#include <string>

#include "nsfn/report.hpp"

namespace nsfn {

// Schema: { "identity": string, "range": object, "cases": integer,
//           "counterexamples": [ { "inputs": object, "expected": string,
//           "actual": string } ], "status": "pass" | "fail" }.
// Integers are plain decimal; byte-identical for equal reports.
std::string to_json(const VerificationReport& report, int indent = 2);

// Key,value header lines followed by one line per counterexample.
std::string to_csv(const VerificationReport& report);

// Shortest round-trip decimal rendering, locale-independent.
std::string format_double(double value);

}  // namespace nsfn
