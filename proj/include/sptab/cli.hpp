#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sptab {

// Runs the command line tool in process. args excludes the program name.
// Returns 0 on success, 1 on invalid input, 2 when a cross-checked
// computation disagrees with its oracle.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sptab
