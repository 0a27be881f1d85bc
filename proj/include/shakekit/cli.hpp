#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shakekit::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain error, 2 input or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tolerance from SHAKEKIT_TOL, or the default. InputError if malformed.
double tolerance_from_env();

}  // namespace shakekit::cli
