#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simulroots {

/// Stable exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_not_converged = 1,  // budget exhausted, or certificate not satisfied
  exit_usage = 2,          // parse error, bad range, coincident initial point
  exit_certificate = 3,    // --require-certificate and the certificate failed
  exit_numerical = 4,      // singular denominator and friends
};

/// Runs `simulroots <subcommand> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simulroots
