#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath {

/// Runs one command.  Returns 0 on success, 1 when a verification fails and
/// 2 on a usage error (reported on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath
