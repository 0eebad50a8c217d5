#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spshuffle {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotSeriesParallel = 2,
  kExitTooLarge = 3,
  kExitVerificationFailed = 4,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spshuffle
