#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyadic::cli {

// Exit codes besides the per-ErrorKind codes in error.hpp.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

// Runs one CLI invocation; args excludes the program name. Results go to the
// --output file when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dyadic::cli
