#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystal {

// Runs one CLI invocation.  Machine output goes to `out` as JSON (lines),
// human summaries and errors to `err`.  Exit code 0 when all requested
// checks pass, 1 on a violation, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal
