#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tambara::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceCap = 3 };

// Runs one command line (without the program name). Output is deterministic
// for fixed arguments and seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tambara::cli
