#pragma once

#include <iosfwd>

namespace dirac1d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `dirac1d` tool. Regular output goes to `out` unless a
/// command was given --out; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirac1d::cli
