#pragma once

#include <string>
#include <vector>

namespace hap::cli {

inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInvariantViolation = 4,
};

struct CliResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command line (args excludes the program name) and captures its output.
CliResult run(const std::vector<std::string>& args);

}  // namespace hap::cli
