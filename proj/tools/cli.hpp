#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitmeasure::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, budget = 3 };

/// Environment variable holding the default enumeration budget.
inline constexpr const char* kBudgetEnv = "SPLITMEASURE_BUDGET";

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitmeasure::cli
