#pragma once

#include <ostream>

namespace arcond::cli {

enum Exit : int {
  ok = 0,
  binding_failure = 1,
  input_error = 2,
  computation_error = 3,
};

/// Runs the arcond command line; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arcond::cli
