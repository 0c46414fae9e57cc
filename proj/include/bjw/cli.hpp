#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bjw {

// Runs the command-line front end. args excludes the program name.
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bjw
