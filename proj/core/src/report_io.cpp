#include "nsfn/report_io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace nsfn {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_to_json(const ReportValue& value) {
  return std::visit([](const auto& v) { return ordered_json(v); }, value);
}

std::string value_to_text(const ReportValue& value) {
  struct Renderer {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const std::vector<std::int64_t>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += std::to_string(v[i]);
      }
      return out;
    }
  };
  return std::visit(Renderer{}, value);
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  ordered_json j;
  j["identity"] = report.identity;
  ordered_json range = ordered_json::object();
  for (const auto& [key, value] : report.range) {
    range[key] = value_to_json(value);
  }
  j["range"] = std::move(range);
  j["cases"] = report.cases_checked;
  ordered_json ces = ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [key, value] : ce.inputs) {
      inputs[key] = value_to_json(value);
    }
    ces.push_back({{"inputs", std::move(inputs)}, {"expected", ce.expected}, {"actual", ce.actual}});
  }
  j["counterexamples"] = std::move(ces);
  j["status"] = report.pass() ? "pass" : "fail";
  return j.dump(indent) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity," << report.identity << "\n";
  for (const auto& [key, value] : report.range) {
    out << key << "," << value_to_text(value) << "\n";
  }
  out << "cases," << report.cases_checked << "\n";
  out << "status," << (report.pass() ? "pass" : "fail") << "\n";
  out << "counterexamples," << report.counterexamples.size() << "\n";
  for (const auto& ce : report.counterexamples) {
    out << "counterexample,";
    for (std::size_t i = 0; i < ce.inputs.size(); ++i) {
      if (i > 0) {
        out << ';';
      }
      out << ce.inputs[i].first << '=' << value_to_text(ce.inputs[i].second);
    }
    out << ',' << ce.expected << ',' << ce.actual << "\n";
  }
  return out.str();
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace nsfn
