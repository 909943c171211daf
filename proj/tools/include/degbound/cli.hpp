#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Documents go to `out`
/// unless an output path is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace degbound::cli
