#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmce::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kIoError = 3,
};

// Entry point shared by the binary and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmce::cli
