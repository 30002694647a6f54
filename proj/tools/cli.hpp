#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchlab::cli {

enum Exit : int { Ok = 0, Disagree = 1, BadConfig = 2, Unsupported = 3, Internal = 4 };

// Runs one command line (args exclude the program name) and returns the exit
// status. Regular output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace branchlab::cli
