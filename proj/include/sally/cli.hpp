#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sally {

// Dispatches one CLI invocation (arguments without the program name) and
// writes the report to out. Exit codes: 0 success, 1 verification mismatch,
// 2 input error, 3 resource or stabilization failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sally
