#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsym::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;                  // one-line summary of what was checked
  std::vector<std::string> notes;       // published-value comparison remarks
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct VerifyOptions {
  uint64_t seed = 20240501;
  int trials = 0;      // 0: use each suite's default
  int max_mode = 4;
  int max_qdeg = 4;
};

// Acceptance criteria, numbered 1..15.
CheckResult run_criterion(int k, const VerifyOptions& opt);
int criterion_count();

// Named suites for the command line; each maps to one or more criteria.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace nsym::verify
