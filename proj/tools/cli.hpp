#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperpoly::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kInputError = 2 };

// Runs the command line given without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly::cli
