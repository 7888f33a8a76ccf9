#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankcurv::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit code:
/// 0 ok, 1 I/O, 2 parse or usage, 3 not ranked, 4 domain error, 5 verdict fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rankcurv::cli
