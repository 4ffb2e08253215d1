#pragma once

#include <string>
#include <vector>

namespace halg {

struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Runs one command line (program name excluded) and captures the rendered
// report. Exit codes: 0 success, 1 failed mathematical check, 2 usage or
// syntax error, 3 invalid input data.
RunResult run(const std::vector<std::string>& args);

} // namespace halg
