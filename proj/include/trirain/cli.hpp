#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trirain::cli {

enum ExitStatus : int {
  kOk = 0,         // property holds / success
  kFails = 1,      // property fails, e.g. a rainbow triangle was found
  kUsage = 2,      // usage or format error
  kLimit = 3,      // node or size limit hit
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trirain::cli
