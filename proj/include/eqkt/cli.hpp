#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqkt {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kCapExceeded = 2, kInconsistent = 3 };

/// Runs one command. `args` excludes the program name; results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqkt
