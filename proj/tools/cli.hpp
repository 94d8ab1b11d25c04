#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobnorm::cli {

/// Process exit codes. Library errors map to their ErrorCode value (3-11).
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kVerifyFailed = 12,
  kInternal = 13,
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobnorm::cli
