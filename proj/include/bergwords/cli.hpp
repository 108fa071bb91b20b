#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergwords {

// Command-line surface.  `args` excludes the program name.  Exit codes:
// 0 success, 1 validation error (the specific error name is printed),
// 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bergwords
