#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psi::cli {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psi::cli
