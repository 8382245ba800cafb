#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsr::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// usage text to `err`. Returns 0 on success, 1 when a verifier reports
/// failures, 2 on usage or precondition errors, 3 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsr::cli
