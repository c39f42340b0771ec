#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicpair {

// Entry point behind the `cubicpair` binary. Returns the process exit code:
// 0 success, 1 domain/input error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cubicpair
