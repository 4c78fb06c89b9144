#pragma once

#include <iosfwd>

namespace catloc {

/// Exit codes: 0 all checks pass, 1 a theorem clause fails, 2 usage or data error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitClauseFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the catloc tool. Budgets are read from the JSON file named by
/// CATLOC_CONFIG, then overridden by flags.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catloc
