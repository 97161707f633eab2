#pragma once

#include <iosfwd>

namespace chiforge::cli {

  enum ExitCode : int {
    ok            = 0,
    input_error   = 2,
    overflow      = 3,
    check_failure = 4,
    refused       = 5,
  };

  // Runs the chi-forge command line with the given arguments (argv[0] is the
  // program name). Reports go to out unless --out is given; diagnostics go
  // to err.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chiforge::cli
