#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mbposet {

enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_verdict_false = 2 };

/// Runs one subcommand; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbposet
