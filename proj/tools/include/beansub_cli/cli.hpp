#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beansub::cli {

enum ExitCode : int { kAllPass = 0, kVerifiedFailure = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beansub::cli
