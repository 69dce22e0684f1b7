#pragma once

#include <string>
#include <vector>

namespace toricdimer::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kVerificationFailure = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // JSON payload
  std::string err;  // diagnostics
};

/// Runs one command line; args excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace toricdimer::cli
