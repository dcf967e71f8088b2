#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adenets::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Runs the command line (args excludes the program name). The default
/// output format comes from ADENETS_FORMAT when --format is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adenets::cli
