#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordmetric::cli {

enum ExitCode : int { ok = 0, domain_error = 1, parse_error = 2, defect = 3 };

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordmetric::cli
