#include <doctest.h>

#include <json.hpp>

#include "nsfn/report.hpp"
#include "nsfn/report_io.hpp"

namespace {

nsfn::VerificationReport sample_report(bool with_counterexample) {
  nsfn::VerificationReport report;
  report.identity = "theorem1";
  report.range = {{"n_max", std::int64_t{100}},
                  {"m_set", std::vector<std::int64_t>{0, 1, -2}},
                  {"tolerance", 0.005},
                  {"a_set", std::string("0 1 n")}};
  report.cases_checked = 12;
  if (with_counterexample) {
    report.counterexamples.push_back(nsfn::Counterexample{
        {{"a", std::int64_t{5}}, {"n", std::int64_t{12}}, {"f", std::string("phi")}},
        "-1",
        "3"});
  }
  return report;
}

}  // namespace

TEST_CASE("exit code follows pass/fail") {
  CHECK(nsfn::report_exit_code(sample_report(false)) == 0);
  CHECK(nsfn::report_exit_code(sample_report(true)) == 1);
}

TEST_CASE("json schema fields, order and values") {
  const std::string text = nsfn::to_json(sample_report(true));
  const auto j = nlohmann::json::parse(text);

  CHECK(j["identity"] == "theorem1");
  CHECK(j["range"]["n_max"] == 100);
  CHECK(j["range"]["m_set"] == nlohmann::json::array({0, 1, -2}));
  CHECK(j["range"]["tolerance"] == 0.005);
  CHECK(j["cases"] == 12);
  CHECK(j["status"] == "fail");
  REQUIRE(j["counterexamples"].size() == 1);
  CHECK(j["counterexamples"][0]["inputs"]["a"] == 5);
  CHECK(j["counterexamples"][0]["inputs"]["f"] == "phi");
  CHECK(j["counterexamples"][0]["expected"] == "-1");
  CHECK(j["counterexamples"][0]["actual"] == "3");

  // documented key order is preserved
  CHECK(text.find("\"identity\"") < text.find("\"range\""));
  CHECK(text.find("\"range\"") < text.find("\"cases\""));
  CHECK(text.find("\"cases\"") < text.find("\"counterexamples\""));
  CHECK(text.find("\"counterexamples\"") < text.find("\"status\""));

  CHECK(nsfn::to_json(sample_report(false)) == nsfn::to_json(sample_report(false)));
}

TEST_CASE("csv rendering") {
  const std::string text = nsfn::to_csv(sample_report(true));
  CHECK(text.find("identity,theorem1\n") != std::string::npos);
  CHECK(text.find("n_max,100\n") != std::string::npos);
  CHECK(text.find("m_set,0 1 -2\n") != std::string::npos);
  CHECK(text.find("cases,12\n") != std::string::npos);
  CHECK(text.find("status,fail\n") != std::string::npos);
  CHECK(text.find("counterexample,a=5;n=12;f=phi,-1,3\n") != std::string::npos);

  const std::string pass_text = nsfn::to_csv(sample_report(false));
  CHECK(pass_text.find("status,pass\n") != std::string::npos);
  CHECK(pass_text.find("counterexamples,0\n") != std::string::npos);
}

TEST_CASE("double formatting is plain and round-trips") {
  CHECK(nsfn::format_double(0.005) == "0.005");
  CHECK(nsfn::format_double(1.0) == "1");
  const double value = 0.6079271018540267;
  CHECK(std::stod(nsfn::format_double(value)) == value);
}
