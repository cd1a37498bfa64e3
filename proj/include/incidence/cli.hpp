#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incidence::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incidence::cli
