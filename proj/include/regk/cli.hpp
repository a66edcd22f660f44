#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regk {

/// Runs the command line (without the program name). JSON data goes to
/// `out`, structured errors to `err`. Exit codes: 0 success, 1 failed
/// verification, 2 invalid input, 3 internal inconsistency.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace regk
