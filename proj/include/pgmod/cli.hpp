#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgmod {

// Runs the command-line front end; returns the process exit code.
// Exit codes: 0 success, 1 internal error, 2 domain error, 3 undetermined.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pgmod
