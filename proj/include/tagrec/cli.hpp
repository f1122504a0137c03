#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tagrec::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kData = 3 };

// Runs one command line (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tagrec::cli
