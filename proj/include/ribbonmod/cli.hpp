#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbonmod::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kIntegrality = 3,
    kLemmaFailure = 4,
};

/// Runs the command line front end. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ribbonmod::cli
