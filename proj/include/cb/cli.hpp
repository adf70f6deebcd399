#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cb {

/// Exit codes: 0 success, 1 degenerate input, 2 usage or parse error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cb
