#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mop::cli {

/// Runs one CLI command (args exclude the program name) and writes results
/// to out, diagnostics to err. Returns the process exit code: 0 on
/// success/pass, 1 on computation or verification failure, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mop::cli
