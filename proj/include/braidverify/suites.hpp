#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidverify {

struct SuiteParams {
  int n = 0;        // 0 = suite default (usually a small grid)
  long dmax = 0;    // 0 = suite default
  int maxlen = 0;   // 0 = suite default
  std::uint64_t seed = 1729;
  bool enable_n6 = false;
};

enum class CheckStatus { pass, fail, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct Report {
  std::string suite;
  SuiteParams params;
  std::vector<Check> checks;
  long wall_time_ms = 0;

  int count(CheckStatus s) const;
  bool ok() const; // no failing check
  std::string to_json() const;
  std::string to_table() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

std::vector<SuiteInfo> list_suites();

// Runs one named suite. Throws std::invalid_argument for unknown names;
// anything a check raises is captured as a failing check, not an exception.
Report run_suite(const std::string& name, const SuiteParams& params = {});

} // namespace braidverify
