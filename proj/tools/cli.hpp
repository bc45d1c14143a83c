#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genergy::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

/// Runs one command line (argv without the program name). Reads stdin only
/// when the energy command is given no graphs and no input file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace genergy::cli
