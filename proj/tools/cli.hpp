#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracgreen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Primary output goes
/// to `out` unless redirected with --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Oracle suite behind the `selftest` subcommand. Returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace fracgreen::cli
