#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersub {

/// Entry point of the `hypersub` tool; args exclude the program name.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersub
