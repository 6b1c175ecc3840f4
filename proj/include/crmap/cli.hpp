#pragma once

#include <iosfwd>

namespace crmap {

inline constexpr const char* kVersion = "0.1.0";

/// full CLI entry point; returns the process exit code
/// (0 pass, 1 semantic failure, 2 parse error, 3 pole/precondition failure)
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crmap
