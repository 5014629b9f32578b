#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ddc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kResource = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddc::cli
