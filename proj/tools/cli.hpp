#pragma once

// `restab` command-line front end. run() is the whole program minus
// process setup, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 usage error, 2 data rejection, 3 numerical failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace restab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumerical = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "1..30", "20,25,...,45" or a plain comma list into split points.
// Throws std::invalid_argument on malformed text.
std::vector<int> parse_splits(const std::string& text);

}  // namespace restab::cli
