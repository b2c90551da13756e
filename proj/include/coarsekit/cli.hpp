#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coarsekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;

/// Runs one command line (without the program name). Reports go to `out` unless
/// --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarsekit::cli
