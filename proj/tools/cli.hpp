#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hinembed::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kNumericFailure = 3,
};

// Entry point for `hinembed <command> ...`. Commands: proximity, train, eval, knn.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hinembed::cli
