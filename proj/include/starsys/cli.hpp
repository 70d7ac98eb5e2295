#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starsys::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;    ///< predicate false, unsolvable, not comparable
inline constexpr int kExitUsage = 2;    ///< bad arguments, unreadable or malformed input
inline constexpr int kExitNumeric = 3;  ///< SVD or generator failure

/// Runs one command line (without the program name). Diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace starsys::cli
