#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birkhoff {

// Runs one CLI invocation; args exclude the program name.  Returns the
// process exit code: 0 on success, 1 when a requested check fails, 2 on
// usage or input errors.  All diagnostics go to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace birkhoff
