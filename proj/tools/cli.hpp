#pragma once

#include <iosfwd>

namespace mncs::cli {

enum ExitCode : int {
  kOk = 0,
  kNumericalFailure = 1,
  kConfigError = 2,
  kMismatch = 3,
};

/// Entry point of the mncs tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mncs::cli
