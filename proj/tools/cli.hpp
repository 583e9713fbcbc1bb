#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twuality::cli {

/// Dispatches one CLI invocation (without the program name). Returns the
/// process exit code: 0 success / no witness, 1 witness found, 2 usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twuality::cli
