#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mainspectra::cli {

/// Runs one invocation. args excludes the program name. Exit codes: 0 ok,
/// 1 failed check / infeasible pair / input errors, 2 bad flags.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mainspectra::cli
