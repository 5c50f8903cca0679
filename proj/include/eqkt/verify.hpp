#pragma once

// Self-check suites run by `eqkt verify`.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace eqkt {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// a2-full, b2, g2, towers, theoP or all.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 20240601, unsigned threads = 1);
const std::vector<std::string>& suite_names();

}  // namespace eqkt
