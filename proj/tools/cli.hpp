#pragma once

#include <iosfwd>

namespace mcfl::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kNotMonge = 3,
};

// Entry point of the `mcfl` command; output goes to the given streams so the
// commands can be driven in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcfl::cli
