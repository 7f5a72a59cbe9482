#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmc {

/// Exit codes: 0 success, 1 parse or validation error (or a failed verify
/// check), 2 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankmc
