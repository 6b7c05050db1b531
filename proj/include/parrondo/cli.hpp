#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parrondo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitIo = 3;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parrondo::cli
