#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operadkit::cli {

/// Exit codes: 0 success, 1 a check or round trip failed, 2 bad usage,
/// unreadable input or invalid structure.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalid = 2;

/// Runs one command line (without the program name). A positional file
/// argument of "-" or none at all reads `in`. Color is enabled only when
/// the environment variable OPERADKIT_COLOR is "1", "on" or "always".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace operadkit::cli
