#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "holestab/audit.hpp"
#include "holestab/stabilizer_chain.hpp"

namespace holestab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "holestab-report/1";

/// Exact integers stay JSON numbers while they fit in 64 bits and become
/// decimal strings beyond that.
inline Json order_json(const Order& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

/// One claimed value compared against the computed one.
struct Check {
  std::string claim;
  Json expected;
  Json actual;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<Violation> violations;
  std::optional<std::string> error;
  double elapsed_ms = 0;

  bool ok() const {
    if (error || !violations.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  bool check(std::string claim, Json expected, Json actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(claim), std::move(expected), std::move(actual), pass});
    return pass;
  }
};

inline Json to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"rule", v.rule}, {"witness", v.witness}});
  return {{"schema", kReportSchema},
          {"command", r.command},
          {"inputs", r.inputs},
          {"seed", r.seed},
          {"results", r.results},
          {"checks", checks},
          {"violations", violations},
          {"error", r.error ? Json(*r.error) : Json(nullptr)},
          {"ok", r.ok()},
          {"elapsed_ms", r.elapsed_ms}};
}

inline RunReport report_from_json(const Json& j) {
  if (j.at("schema") != kReportSchema) throw Error("unknown report schema");
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs").get<std::vector<std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.results = j.at("results");
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("claim").get<std::string>(), c.at("expected"), c.at("actual"), c.at("pass").get<bool>()});
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("rule").get<std::string>(), v.at("witness").get<std::string>()});
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

inline std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << r.command;
  for (const auto& in : r.inputs) out << ' ' << in;
  out << '\n';
  for (const auto& [key, value] : r.results.items())
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.claim;
    if (!c.pass) out << " (expected " << c.expected.dump() << ", got " << c.actual.dump() << ')';
    out << '\n';
  }
  for (const auto& v : r.violations) out << "VIOLATION " << v.rule << ": " << v.witness << '\n';
  if (r.error) out << "ERROR " << *r.error << '\n';
  out << (r.ok() ? "ok" : "FAILED") << '\n';
  return out.str();
}

/// Runs `body` on a fresh report, timing it and turning library errors into report errors.
template <typename Body>
RunReport run_command(std::string command, std::vector<std::string> inputs, std::uint64_t seed, Body&& body) {
  RunReport r;
  r.command = std::move(command);
  r.inputs = std::move(inputs);
  r.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace holestab
