#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(NSFN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::size_t count_fields(const std::string& csv_line) {
  return static_cast<std::size_t>(std::count(csv_line.begin(), csv_line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("compute prints the value and exits 0") {
  const CommandResult r = run_cli("compute --a 2 --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-2\n");

  CHECK(run_cli("compute --a 6 --n 6").output == "2\n");
  CHECK(run_cli("compute --a 0 --n 12").output == "4\n");
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli("compute --a 5").exit_code == 2);           // missing --n
  CHECK(run_cli("nonsense").exit_code == 2);                // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                        // subcommand required
  CHECK(run_cli("compute --a 5 --n 0").exit_code == 2);     // domain error
  CHECK(run_cli("compute --a 5 --n 4 --bogus").exit_code == 2);
  CHECK(run_cli("verify dirichlet --tolerance 0").exit_code == 2);
  CHECK(run_cli("verify theorem3 --n-max 10 --m 9999999").exit_code == 2);  // int overflow guard
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("verify subcommands emit pass reports") {
  const CommandResult r = run_cli("verify theorem1 --n-max 50 --a-max 50");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["identity"] == "theorem1");
  CHECK(j["status"] == "pass");
  CHECK(j["cases"] == 50 * 51);
  CHECK(j["counterexamples"].empty());

  for (const std::string id :
       {"theorem1-abs --n-max 40 --a-max 40", "theorem2 --n-max 40", "theorem3 --n-max 30",
        "row-sums --n-max 60", "theorem4 --n-max 40", "corollary1 --n-max 40",
        "corollary3 --n-max 30", "prime-test --n-max 60",
        "dirichlet --a-max 2 --cutoff 5000"}) {
    const CommandResult sub = run_cli("verify " + id);
    CAPTURE(id);
    CHECK(sub.exit_code == 0);
    CHECK(nlohmann::json::parse(sub.output)["status"] == "pass");
  }
}

TEST_CASE("verify theorem3 accepts repeated --m including negatives") {
  const CommandResult r = run_cli("verify theorem3 --n-max 20 --m 2 --m -1 --m=-2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["range"]["m_set"] == nlohmann::json::array({2, -1, -2}));
  CHECK(j["status"] == "pass");
}

TEST_CASE("reports are byte-identical across jobs and runs") {
  const CommandResult once = run_cli("verify theorem4 --n-max 60 --jobs 1");
  const CommandResult twice = run_cli("verify theorem4 --n-max 60 --jobs 2");
  const CommandResult again = run_cli("verify theorem4 --n-max 60 --jobs 2");
  CHECK(once.exit_code == 0);
  CHECK(once.output == twice.output);
  CHECK(twice.output == again.output);
}

TEST_CASE("csv table rows are ragged with n cells each") {
  const CommandResult r = run_cli("table --n-max 6 --format csv");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.output);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "n,a0,a1,a2,a3,a4,a5");
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(count_fields(lines[n]) == n + 1);  // row label + n value cells
  }
  CHECK(lines[4] == "4,2,0,-2,0");
}

TEST_CASE("json table") {
  const CommandResult r = run_cli("table --n-max 4 --format json");
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["n_max"] == 4);
  CHECK(j["rows"][3] == nlohmann::json::array({2, 0, -2, 0}));
}

TEST_CASE("coeffs dumps the product expansion") {
  const CommandResult r = run_cli("coeffs --n 4 --format csv");
  const std::vector<std::string> lines = split_lines(r.output);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "k,coefficient");
  const std::vector<std::string> expected{"0,1", "1,-1", "2,-1", "3,0", "4,1", "5,1", "6,-1"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(lines[i + 1] == expected[i]);
  }

  const auto j = nlohmann::json::parse(run_cli("coeffs --n 4 --format json").output);
  CHECK(j["degree"] == 6);
  CHECK(j["coefficients"] ==
        nlohmann::json::array({"1", "-1", "-1", "0", "1", "1", "-1"}));
}

TEST_CASE("primes lists the odd primes") {
  const CommandResult r = run_cli("primes --max 30");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n5\n7\n11\n13\n17\n19\n23\n29\n");

  const auto j = nlohmann::json::parse(run_cli("primes --max 30 --format json").output);
  CHECK(j["status"] == "pass");
  CHECK(j["primes"] == nlohmann::json::array({3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST_CASE("series emits one row per a") {
  const CommandResult r = run_cli("series --a-max 2 --cutoff 2000");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "a,cutoff,partial,target,residual,pass");
  CHECK(lines[1].substr(0, 7) == "1,2000,");
  CHECK(lines[1].substr(lines[1].size() - 4) == "true");
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "/tmp/nsfn_cli_test_report.json";
  std::remove(path.c_str());
  const CommandResult direct = run_cli("verify row-sums --n-max 30");
  const CommandResult filed = run_cli("verify row-sums --n-max 30 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}
