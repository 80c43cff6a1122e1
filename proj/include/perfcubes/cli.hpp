#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace perfcubes::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // verification failure or counterexample candidate
  kUsage = 2,
  kBoundExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace perfcubes::cli
