#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgp {

/// Runs one CLI invocation (argv without the program name).  Returns 0 on
/// success, 1 on domain errors (error name on `err`), 2 on usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgp
