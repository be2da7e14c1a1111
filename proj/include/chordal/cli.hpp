#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordal::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // not chordal, not equal, square fails, ...
  kUsage = 2,     // bad arguments or unreadable input
  kInternal = 3,  // an internal invariant or oracle check failed
};

// Runs one command. `args` excludes the program name. Inputs that name an
// existing file are read from it; anything else is taken as inline text
// (for edge lists, ';' separates lines).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordal::cli
