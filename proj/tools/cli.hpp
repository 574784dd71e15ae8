#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densitygeom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInvalidState = 3,
  kIoFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --out is given; diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace densitygeom::cli
