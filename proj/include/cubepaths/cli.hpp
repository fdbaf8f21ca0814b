#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubepaths {

// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubepaths
