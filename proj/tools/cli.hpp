#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathcheck {

// Runs one command line (without the program name).  Returns the exit
// status: 0 satisfied or done, 1 not satisfied, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathcheck
