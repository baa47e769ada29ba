#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitGuard = 3;

// Runs one subcommand (args exclude the program name) and writes a single JSON
// document to out. Returns 0 on a computed result, 2 on parse or validation
// errors, 3 when a size guard aborts the computation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
