#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqca::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // a check failed or the library rejected the input
  kUsage = 2,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gqca::cli
