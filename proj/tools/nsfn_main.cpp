// nsfn — compute the arithmetic function Ns(a, n) and machine-verify the
// identities it satisfies, with exact integer/rational arithmetic throughout.
//
// Exit codes: 0 success/pass, 1 identity violation (counterexample found),
// 2 usage or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsfn/analytic.hpp"
#include "nsfn/arith.hpp"
#include "nsfn/identities.hpp"
#include "nsfn/ns.hpp"
#include "nsfn/qseries.hpp"
#include "nsfn/rational.hpp"
#include "nsfn/report.hpp"
#include "nsfn/report_io.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "";  // per-command default when empty
  std::string out_path;
  int jobs = 0;  // 0 = all available parallelism
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  file << text;
}

int emit_report(const nsfn::VerificationReport& report, const GlobalOptions& opts) {
  const std::string format = opts.format.empty() ? "json" : opts.format;
  emit(format == "csv" ? nsfn::to_csv(report) : nsfn::to_json(report), opts.out_path);
  return nsfn::report_exit_code(report);
}

std::string render_table(const nsfn::NsTable& table, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["n_max"] = table.n_max;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      rows.push_back(row);
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  // Ragged CSV: row n stops at a = n-1 since Ns is periodic mod n.
  std::string out = "n";
  for (std::uint64_t a = 0; a < table.n_max; ++a) {
    out += ",a" + std::to_string(a);
  }
  out += "\n";
  for (std::uint64_t n = 1; n <= table.n_max; ++n) {
    out += std::to_string(n);
    for (std::int64_t v : table.row(n)) {
      out += "," + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

std::string render_coeffs(std::uint64_t n, const nsfn::QPolynomial& product,
                          const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["degree"] = product.degree();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : product.coefficients()) {
      coeffs.push_back(nsfn::to_decimal(c));
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
  }
  std::string out = "k,coefficient\n";
  for (std::uint64_t k = 0; k <= product.degree(); ++k) {
    out += std::to_string(k) + "," + nsfn::to_decimal(product.coeff(k)) + "\n";
  }
  return out;
}

std::string render_series(const std::vector<nsfn::SeriesCheck>& checks,
                          const std::string& format) {
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
      rows.push_back({{"a", c.a},
                      {"cutoff", c.cutoff},
                      {"partial", c.partial_sum},
                      {"target", c.target},
                      {"residual", c.residual},
                      {"pass", c.passed}});
    }
    return rows.dump(2) + "\n";
  }
  std::string out = "a,cutoff,partial,target,residual,pass\n";
  for (const auto& c : checks) {
    out += std::to_string(c.a) + "," + std::to_string(c.cutoff) + "," +
           nsfn::format_double(c.partial_sum) + "," + nsfn::format_double(c.target) + "," +
           nsfn::format_double(c.residual) + "," + (c.passed ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_primes(const nsfn::PrimeListing& listing, std::uint64_t n_max,
                          const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["n_max"] = n_max;
    j["cases"] = listing.report.cases_checked;
    j["primes"] = listing.primes;
    j["status"] = listing.report.pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
  }
  std::string out;
  for (std::uint64_t p : listing.primes) {
    out += std::to_string(p) + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ns(a, n) calculator and identity verification harness"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opts.out_path, "Write the report to this path instead of stdout");
  app.add_option("--jobs", opts.jobs, "Worker threads for sweeps (0 = all cores)");

  // compute
  std::uint64_t compute_a = 0;
  std::uint64_t compute_n = 1;
  auto* compute = app.add_subcommand("compute", "Evaluate Ns(a, n)");
  compute->fallthrough();
  compute->add_option("--a", compute_a, "First argument (non-negative)")->required();
  compute->add_option("--n", compute_n, "Second argument (positive)")->required();

  // table
  std::uint64_t table_n_max = 20;
  auto* table = app.add_subcommand("table", "Emit rows [Ns(0,n) .. Ns(n-1,n)] for n up to n-max");
  table->fallthrough();
  table->add_option("--n-max", table_n_max, "Largest row (default 20)");

  // coeffs
  std::uint64_t coeffs_n = 5;
  auto* coeffs =
      app.add_subcommand("coeffs", "Expand prod_{i=1}^{n-1}(1 - q^i) and dump its coefficients");
  coeffs->fallthrough();
  coeffs->add_option("--n", coeffs_n, "Product parameter (default 5)")->required();

  // primes
  std::uint64_t primes_max = 200;
  auto* primes = app.add_subcommand(
      "primes", "List odd numbers accepted by the coefficient primality characterization");
  primes->fallthrough();
  primes->add_option("--max,--n-max", primes_max, "Largest odd n tested (default 200)");

  // series
  std::uint64_t series_a_max = 10;
  std::uint64_t series_cutoff = 100000;
  double series_tolerance = 5e-3;
  auto* series =
      app.add_subcommand("series", "Partial sums of sum_m Ns(a,m)/m^2 against (6/pi^2)*sigma(-1,a)");
  series->fallthrough();
  series->add_option("--a-max", series_a_max, "Check a = 1..a-max (default 10)");
  series->add_option("--cutoff", series_cutoff, "Partial-sum cutoff (default 100000)");
  series->add_option("--tolerance", series_tolerance, "Pass tolerance (default 5e-3)");

  // verify, one subcommand per identity
  auto* verify = app.add_subcommand("verify", "Sweep an identity and report counterexamples");
  verify->require_subcommand(1);
  verify->fallthrough();

  std::uint64_t v_n_max = 200;
  std::uint64_t v_a_max = 200;
  std::vector<int> v_m_set;
  std::uint64_t v_d_a_max = 10;
  std::uint64_t v_cutoff = 100000;
  double v_tolerance = 5e-3;

  auto* v_theorem1 = verify->add_subcommand("theorem1", "sum_{d|n} Ns(a,d) = n if n|a else 0");
  v_theorem1->fallthrough();
  v_theorem1->add_option("--n-max", v_n_max, "default 200");
  v_theorem1->add_option("--a-max", v_a_max, "default 200");

  auto* v_theorem1_abs =
      verify->add_subcommand("theorem1-abs", "sum_{d|n} |Ns(a,d)| = (a,n) * 2^omega(n/(a,n))");
  v_theorem1_abs->fallthrough();
  v_theorem1_abs->add_option("--n-max", v_n_max, "default 200");
  v_theorem1_abs->add_option("--a-max", v_a_max, "default 200");

  auto* v_theorem2 = verify->add_subcommand(
      "theorem2", "sum_{d|(a,n)} f(n/d) d = sum_{d|n} Ns(a,d) g(n/d) for the builtin f set");
  v_theorem2->fallthrough();
  v_theorem2->add_option("--n-max", v_n_max, "default 200");

  auto* v_theorem3 = verify->add_subcommand(
      "theorem3", "sum_a Ns(a,n)^m against the closed product formula (exact rationals)");
  v_theorem3->fallthrough();
  v_theorem3->add_option("--n-max", v_n_max, "default 200");
  v_theorem3->add_option("--m", v_m_set, "Exponent, repeatable (default 0 1 2 3 4 -1 -2)");

  auto* v_row_sums =
      verify->add_subcommand("row-sums", "sum_a Ns(a,n) = [n=1]; sum_a |Ns(a,n)| = phi(n) 2^omega(n)");
  v_row_sums->fallthrough();
  v_row_sums->add_option("--n-max", v_n_max, "default 200");

  auto* v_theorem4 = verify->add_subcommand(
      "theorem4", "Ns(a,n) as residue-class coefficient sums of prod(1-q^i) [conjecture]");
  v_theorem4->fallthrough();
  v_theorem4->add_option("--n-max", v_n_max, "default 200");

  auto* v_corollary1 =
      verify->add_subcommand("corollary1", "phi(n) and mu(n) as coefficient sums");
  v_corollary1->fallthrough();
  v_corollary1->add_option("--n-max", v_n_max, "default 200");

  auto* v_corollary3 =
      verify->add_subcommand("corollary3", "Ns(a,n) read off the generating series");
  v_corollary3->fallthrough();
  v_corollary3->add_option("--n-max", v_n_max, "default 200");

  auto* v_prime_test =
      verify->add_subcommand("prime-test", "coefficient primality characterization vs trial division");
  v_prime_test->fallthrough();
  v_prime_test->add_option("--n-max", v_n_max, "default 200");

  auto* v_dirichlet = verify->add_subcommand(
      "dirichlet", "partial sums of sum Ns(a,m)/m^2 vs (6/pi^2) sigma(-1,a), plus the mu analog");
  v_dirichlet->fallthrough();
  v_dirichlet->add_option("--a-max", v_d_a_max, "default 10");
  v_dirichlet->add_option("--cutoff", v_cutoff, "default 100000");
  v_dirichlet->add_option("--tolerance", v_tolerance, "default 5e-3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) {
      emit(std::to_string(nsfn::ns(compute_a, compute_n)) + "\n", opts.out_path);
      return 0;
    }
    if (table->parsed()) {
      const std::string format = opts.format.empty() ? "csv" : opts.format;
      emit(render_table(nsfn::build_ns_table(table_n_max), format), opts.out_path);
      return 0;
    }
    if (coeffs->parsed()) {
      const std::string format = opts.format.empty() ? "csv" : opts.format;
      emit(render_coeffs(coeffs_n, nsfn::poly_product(coeffs_n), format), opts.out_path);
      return 0;
    }
    if (primes->parsed()) {
      const nsfn::PrimeListing listing = nsfn::list_primes(primes_max, opts.jobs);
      if (!listing.report.pass()) {
        std::cerr << nsfn::to_json(listing.report);
        return 1;
      }
      const std::string format = opts.format.empty() ? "csv" : opts.format;
      emit(render_primes(listing, primes_max, format), opts.out_path);
      return 0;
    }
    if (series->parsed()) {
      const nsfn::SieveTables tables = nsfn::build_sieve(series_cutoff);
      std::vector<nsfn::SeriesCheck> checks;
      for (std::uint64_t a = 1; a <= series_a_max; ++a) {
        checks.push_back(nsfn::dirichlet_check(a, series_cutoff, series_tolerance, tables));
      }
      const std::string format = opts.format.empty() ? "csv" : opts.format;
      emit(render_series(checks, format), opts.out_path);
      return 0;
    }
    if (verify->parsed()) {
      nsfn::VerificationReport report;
      if (v_theorem1->parsed()) {
        report = nsfn::verify_theorem1(v_n_max, v_a_max, opts.jobs);
      } else if (v_theorem1_abs->parsed()) {
        report = nsfn::verify_theorem1_abs(v_n_max, v_a_max, opts.jobs);
      } else if (v_theorem2->parsed()) {
        report = nsfn::verify_theorem2(v_n_max);
      } else if (v_theorem3->parsed()) {
        if (v_m_set.empty()) {
          v_m_set = {0, 1, 2, 3, 4, -1, -2};
        }
        report = nsfn::verify_theorem3(v_n_max, v_m_set);
      } else if (v_row_sums->parsed()) {
        report = nsfn::verify_row_sums(v_n_max, opts.jobs);
      } else if (v_theorem4->parsed()) {
        report = nsfn::verify_theorem4(v_n_max, opts.jobs);
      } else if (v_corollary1->parsed()) {
        report = nsfn::verify_corollary1(v_n_max, opts.jobs);
      } else if (v_corollary3->parsed()) {
        report = nsfn::verify_corollary3(v_n_max, opts.jobs);
      } else if (v_prime_test->parsed()) {
        report = nsfn::verify_prime_test(v_n_max, opts.jobs);
      } else if (v_dirichlet->parsed()) {
        report = nsfn::verify_dirichlet(v_d_a_max, v_cutoff, v_tolerance);
      }
      return emit_report(report, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
