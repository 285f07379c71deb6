#pragma once

#include <string>
#include <vector>

namespace nsymkit {

/// Outcome of one command-line invocation.
struct CommandResult {
    /// 0 success, 1 usage or domain error, 2 verification failure.
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs the command line `args` (program name excluded). Subcommands: mn,
/// strips, convert, mul, srct, verify. NSYMKIT_MAX_DEGREE caps the degree of
/// any computed element (default 12).
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace nsymkit
