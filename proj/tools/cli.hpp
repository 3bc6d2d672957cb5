#pragma once

#include <ostream>

namespace kecore::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_counterexample = 1,
  exit_usage = 2,
  exit_budget = 3,
};

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kecore::cli
