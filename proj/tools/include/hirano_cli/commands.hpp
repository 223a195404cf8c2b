#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hirano::cli {

// Exit codes. Verdicts are data and always exit with kOk.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDimension = 3;
inline constexpr int kNonexistence = 4;
inline constexpr int kInternal = 1;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hirano::cli
