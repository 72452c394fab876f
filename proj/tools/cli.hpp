#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace confspace {

/// Runs one CLI command (args exclude the program name). Writes JSON to `out`
/// and diagnostics to `err`. Returns 0 on success or pass, 1 on a failed
/// verification (the JSON carries a witness), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confspace
