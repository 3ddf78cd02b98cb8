#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2bar {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming a Conway table file; --conway-file wins over it.
inline constexpr const char* kConwayPathEnv = "SL2BAR_CONWAY_PATH";

/// Runs the tool on `args` (program name excluded), writing results to `out`
/// and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2bar
