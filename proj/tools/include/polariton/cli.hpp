#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polariton::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kValidation = 3,
    kConvergence = 4,
};

// Runs one polariton-sim command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version_string();

}  // namespace polariton::cli
