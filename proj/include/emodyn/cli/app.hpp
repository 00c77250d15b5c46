#pragma once

namespace emodyn::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConfig = 3,
  kExitData = 4,
  kExitProvider = 5,
  kExitInternal = 6,
};

/// Parses arguments, runs the selected subcommand and maps errors to exit codes.
int run(int argc, char** argv);

}  // namespace emodyn::cli
