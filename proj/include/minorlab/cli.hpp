#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorlab::cli {

// Runs one command; results go to `out`, diagnostics to `err`.
// Exit code 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorlab::cli
