#pragma once

#include <iosfwd>
#include <string>

#include "subsum/config.hpp"

namespace subsum {

/// Exit codes: 0 success, 2 certificate/verification failure, 3 budget
/// exceeded, 4 config error.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitVerification = 2,
  kExitBudget = 3,
  kExitConfig = 4,
};

/// Executes a parsed command: prints the text artifact to `out` and, when
/// cfg.out_dir is set, writes artifact files there. Identical configs
/// produce identical bytes. Exceptions map to exit codes in run_command_safe.
int run_command(const RunConfig& cfg, std::ostream& out);

/// run_command with the error-to-exit-code mapping applied; diagnostics go
/// to `err`.
int run_command_safe(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace subsum
