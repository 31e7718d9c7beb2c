#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burau4
{

/// Exit codes of the command-line tool.
enum ExitCode : int
{
    kExitSuccess = 0,
    kExitFailure = 1,     // verification or parse failure, usage error
    kExitIdentityHit = 2, // a word evaluated to the identity matrix
};

/// Runs the CLI with `args` (program name excluded). JSON goes to `out`,
/// the human-readable summary and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace burau4
