#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurweyl {

// Full command-line front end, callable in-process. `args` excludes the
// program name. Rendered reports go to `out` (or the --output file), error
// messages to `err`.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 validation/resource error,
// 4 strict-verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurweyl
