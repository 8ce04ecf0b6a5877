#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dmu {

/// Exit codes: 0 clean, 1 discrepancies found, 2 usage or internal error.
inline constexpr int kExitClean = 0;
inline constexpr int kExitDiscrepancies = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmu
