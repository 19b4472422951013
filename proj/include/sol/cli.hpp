#pragma once

#include <iosfwd>

namespace sol::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // usage or parse error
  kInvariant = 3, // matrix violates sapphire invariants / precondition
  kCheckFailed = 4,
  kIoError = 5,
};

/// Runs the command line in-process; used by main() and by the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace sol::cli
