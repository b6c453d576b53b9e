#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfsdisc::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kLimit = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfsdisc::cli
