#ifndef CURVEX_CLI_HPP
#define CURVEX_CLI_HPP

#include <string>
#include <vector>

namespace curvex {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

// Dispatches one command line (without the program name). Exit codes:
// 0 success, 1 malformed input or flags, 2 mathematically inadmissible
// input, 3 internal error.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace curvex

#endif
