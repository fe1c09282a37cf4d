#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncshift {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check failed or an evaluation hit a singular minor
inline constexpr int kExitUsage = 2;

// Runs the front end on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncshift
