#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxperron {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotCertified = 1,
    kExitBadInput = 2,
};

/// Runs the tool on `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxperron
