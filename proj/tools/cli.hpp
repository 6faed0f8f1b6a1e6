#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambdadd::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambdadd::cli
