#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace udproj::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitPartial = 3;

// Runs one subcommand (project, eval, analyze, match). `args` excludes the
// program name. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace udproj::cli
