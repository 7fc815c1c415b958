#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdmosc {

/// Command-line front end. `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 a verification case failed, 2 configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdmosc
