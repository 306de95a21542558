#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfaff::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kInputError = 2 };

// Entry point of the pfaff tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfaff::cli
