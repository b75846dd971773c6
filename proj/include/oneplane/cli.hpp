#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oneplane {

// Runs one CLI invocation.  Exit codes: 0 success / all checks pass,
// 1 a requested check failed, 2 usage or input-format error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace oneplane
