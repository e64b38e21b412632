#pragma once

#include <string>
#include <vector>

namespace grunit::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_verification = 3,
    exit_format = 4,
    exit_resource = 5,
};

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;  // JSON report or exported text
    std::string err;  // diagnostics
};

// argv without the program name, e.g. {"verify", "theorem1"}.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace grunit::cli
