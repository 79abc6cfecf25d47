// Command-line front end. Exit codes: 0 success, 1 usage or config error,
// 2 verification failure.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hvol::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailed = 2 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvol::cli
