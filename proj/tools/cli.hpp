#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starmoments::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output is written to
/// `out` only once the command has succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace starmoments::cli
