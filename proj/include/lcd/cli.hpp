#pragma once

// The command-line application, callable in-process so tests can drive it
// without spawning a shell.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcd::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// LCD_MAX_SERIES_ORDER, default 1000.
unsigned max_series_order();

}  // namespace lcd::cli
