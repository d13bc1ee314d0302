#pragma once

#include <iosfwd>

namespace curvkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `curvkit` executable. Subcommands: generate,
/// compute, compare, asymptotics, moments, bench. Returns 0 on success, 2 on
/// a usage error (reported on `err`), 1 on a runtime error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvkit::cli
