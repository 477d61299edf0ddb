#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace booldim::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapacityError = 3;

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

}  // namespace booldim::cli
