#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifss {

/// Entry point behind the `ifss` binary; `args` excludes the program name.
/// Subcommands: validate, distance, similarity, diagnose.
/// Exit codes: 0 success, 1 data or measure error, 2 usage error.
/// Output for a fixed input file and flags is byte-identical across runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifss
