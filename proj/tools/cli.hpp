#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polya::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command; `args` excludes the program name. Results go to `out`
/// unless --out names a file, diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
