#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace pstab::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kBadParameters = 2, kCapExceeded = 3, kMismatch = 4 };

// Runs one command line (args excludes the program name). JSON goes to out,
// the human-readable summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pstab::cli
