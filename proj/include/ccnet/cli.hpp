#pragma once
#include <string>
#include <vector>

namespace ccnet {

// Text destined for stdout plus the process exit code:
// 0 success, 1 validation error, 2 guard refusal, 3 internal invariant
// violation.
struct CommandResult {
    std::string output;
    int exit_code = 0;
};

// Dispatches one CLI invocation (the argument vector without the program
// name). Never throws: errors become a JSON error report with the matching
// exit code.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace ccnet
