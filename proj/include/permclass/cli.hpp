#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permclass::cli {

/// Runs one `permclass` subcommand. `args` excludes the program name.
/// Returns the exit code: 0 ok, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permclass::cli
