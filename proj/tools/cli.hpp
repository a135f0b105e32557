#pragma once

#include <iosfwd>

namespace xsect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;

// Entry point of the `xsect` tool with injectable streams.
// Subcommands: enum, radix, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xsect::cli
