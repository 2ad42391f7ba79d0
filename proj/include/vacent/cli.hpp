#pragma once
// Command-line front end. Subcommands: point, sweep, validate.
// Exit codes: 0 success, 1 validation or numerical failure, 2 usage error.
#include <iosfwd>
#include <string>
#include <vector>

namespace vacent::cli {

inline constexpr const char* kConfigEnv = "VACENT_CONFIG";

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vacent::cli
