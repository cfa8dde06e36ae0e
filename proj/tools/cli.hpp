#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nekcli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kBadInput = 2, kDegenerate = 3 };

/// Runs the command line (without the program name). Report output goes to
/// out unless --out is given; diagnostics and timing go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nekcli
