#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oafrac {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,            // success / all requested checks hold
    kExitVerifyFailed = 1,  // a verification or catalog check failed
    kExitUsage = 2,         // bad arguments, unsupported case, parse or I/O error
    kExitInconclusive = 3,  // search stopped on its node budget
};

/// Run the command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oafrac
