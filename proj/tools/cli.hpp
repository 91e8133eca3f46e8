#pragma once

#include <ostream>

namespace ugk::cli {

enum Exit { kOk = 0, kFails = 1, kUnknown = 2, kInputError = 3 };

/// Runs one invocation of the command-line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ugk::cli
