#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isobaric::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kDomain = 2, kVerification = 3 };

/// Runs one `iso` command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace isobaric::cli
