#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgrav::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Parses `args` (without the program name), runs exactly one subcommand and
/// writes its table to `out` or to --output. Usage and diagnostics go to `err`.
/// Returns kExitOk, kExitConfig for bad flags, values or files, and
/// kExitNumerical when a computation fails.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgrav::cli
