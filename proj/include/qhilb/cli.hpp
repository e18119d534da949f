#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhilb {

// Exit codes of the command-line front end.
enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// Runs `qhilb <args...>` writing results to out and diagnostics to err.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Default location of the appendix reference table.
std::string default_golden_path();

} // namespace qhilb
