// Command-line front end. run_cli is the whole program: the binary in
// tools/ is a thin wrapper, and tests drive the same code path in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ribbon/geometry.hpp"

namespace ribbon {

// Exit codes: 0 = affirmative/success, 1 = negative verdict (untileable,
// not connected, pattern violated, verification disagreement), 2 = usage
// or input error (including enumeration caps being exceeded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "rect:AxB" (A = height) or "@path" to a region file.
Region parse_region_spec(const std::string& spec);

}  // namespace ribbon
