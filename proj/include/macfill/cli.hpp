#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macfill::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). stdin is read
/// only when a command is given "-" or no input file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace macfill::cli
