#pragma once

// Command-line front end: count, table, verify, spectrum, rsk, series, suite.

#include <iosfwd>
#include <string>
#include <vector>

namespace bellmoves::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Exit 0 on success, 1 when a verification
/// fails, 2 on a usage error (usage text goes to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bellmoves::cli
