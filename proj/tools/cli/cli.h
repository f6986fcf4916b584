#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eprdist::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,    // malformed arguments or invalid input values
  kNumeric = 3,  // numeric or model-domain failure
  kIo = 4,       // unreadable input or unwritable output
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace eprdist::cli
