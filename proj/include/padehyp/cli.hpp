#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padehyp {

enum ExitCode : int { kExitPass = 0, kExitPropertyFailure = 1, kExitUsage = 2 };

// Entry point of the padehyp tool. args excludes the program name. Results go
// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padehyp
