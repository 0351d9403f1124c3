// cli.hpp: batch command-line driver. Every pipeline of the library is
// exposed as a subcommand with deterministic, machine-checkable output.
#pragma once

#include "toricemb/io.hpp"

#include <string>
#include <vector>

namespace toricemb {

enum class CommandStatus { success, input_error, check_failure };

struct CommandResult {
    CommandStatus status = CommandStatus::success;
    Json payload;      // structured result for the command
    std::string text;  // rendered output; equals the payload dump in machine mode

    int exit_code() const;  // success 0, check_failure 1, input_error 2
};

// argv without the program name, e.g. {"classify", "--p", "1", ...}.
CommandResult run_command(std::vector<std::string> args);

}  // namespace toricemb
