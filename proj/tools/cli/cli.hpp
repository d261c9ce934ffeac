#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geocheck::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 when every check passes, 1 when a verification fails, 2 for
/// invalid input (usage text goes to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geocheck::cli
