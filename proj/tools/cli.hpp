#ifndef BOOLSEMI_TOOLS_CLI_HPP
#define BOOLSEMI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace boolsemi::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command line `args` (without the program name). JSON goes to
/// `out`, diagnostics to `err`. Returns 0 on success and 2 on input or
/// limit errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace boolsemi::cli

#endif  // BOOLSEMI_TOOLS_CLI_HPP
