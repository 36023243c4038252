#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnsum::cli {

/// Runs the command line with `args` (args[0] is the program name). Normal
/// output goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnsum::cli
