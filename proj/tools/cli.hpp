#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dijklab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// results to `out`, diagnostics to `err`. Returns the process exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dijklab::cli
