#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicaut::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kUnsupported = 3;
constexpr int kMismatch = 4;
constexpr int kOutsideS = 5;
constexpr int kSizeBudget = 6;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bicaut::cli
