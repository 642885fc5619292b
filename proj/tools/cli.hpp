#pragma once

// Command-line front end: invert, det, check, solve, green, bench, detect.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace circinv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSingular = 2,
  kCap = 3,
  kIncompatible = 4,
};

/// Name of the environment variable that supplies the default tolerance.
inline constexpr const char* kToleranceEnv = "CIRCINV_TOL";

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits; non-finite values become "null".
std::string format_double(double x);

/// Two-space indented JSON with numeric arrays kept on one line.
std::string to_json_text(const nlohmann::ordered_json& value);

}  // namespace circinv::cli
