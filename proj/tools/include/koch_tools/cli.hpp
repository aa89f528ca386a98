#pragma once

#include <ostream>

namespace koch::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitResource = 4;

/// Entry point of the koch command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace koch::tools
