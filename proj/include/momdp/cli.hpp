#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace momdp {

/// Runs the command-line front end. Returns 0 when the engine converged,
/// 2 on any partial status (output is still written), 1 on usage, parse or
/// model errors (message on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace momdp
