#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbm {

// Command-line front end. args excludes the program name. Returns the exit
// status: 0 success, 1 user error, 2 unknown equivalence verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sbm
