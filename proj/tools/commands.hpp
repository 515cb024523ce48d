#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrb::cli {

/// Exit codes: 0 all checks pass, 1 a declared structure fails, 2 input error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one rrbtool invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrb::cli
