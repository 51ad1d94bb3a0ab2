#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bv::cli {

// args excludes the program name.  Returns 0 on success, 1 when a check
// fails (including "not equal"), 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bv::cli
