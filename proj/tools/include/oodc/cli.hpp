#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace oodc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs `oodc <command> [options] files...` with `args` excluding the program
/// name. Program output goes to `out`, diagnostics and usage errors to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oodc::cli
