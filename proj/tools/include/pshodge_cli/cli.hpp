#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pshodge::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kSelfcheckFailed = 2 };

/// Runs the command line; argv[0] is the program name. All output goes to the
/// two streams, so the commands can be driven from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pshodge::cli
