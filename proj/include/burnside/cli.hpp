#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside {

// Runs the command-line front end on the given arguments (program name
// excluded).  Reports go to `out`, parse diagnostics to `err`.  Exit codes:
// 0 success, 2 input error, 3 cap exceeded, 4 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace burnside
