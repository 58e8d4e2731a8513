#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pyramid {

// Exit codes: 0 success or verified, 1 violation or failed verification, 2 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pyramid
