#pragma once

// Command-line front end. Exit codes: 0 pass, 1 fail or unclassified,
// 2 input error (nothing is written in that case).

#include <string>
#include <vector>

namespace brach {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "BRACH_OUT_DIR";

/// Parses "start:end:count" (end inclusive, "pi" accepted in start/end, e.g.
/// "0:pi:64", "-pi/2:2*pi:5"). Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& text);

/// Parses a real number that may use the pi literal.
double parse_angle(const std::string& text);

int run_cli(int argc, char** argv);

}  // namespace brach
