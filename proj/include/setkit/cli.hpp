#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setkit {

// Runs the command line (args without the program name) and returns the
// process exit code: 0 success, 1 property violated, 2 parse error or bad
// input, 3 fuel or size limit exhausted.  All output is deterministic.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace setkit
