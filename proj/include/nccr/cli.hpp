#pragma once

#include <string>
#include <vector>

namespace nccr {

struct CliOutcome {
  int exit_code = 0;
  std::string out;  // serialized report (or help text)
  std::string err;  // diagnostics for failures
};

// Executes one command line (program name excluded).  Exit codes: 0 for any
// computed verdict, 2 for usage or precondition errors, 3 for cap/resource
// errors.  Output bytes are identical for identical argument vectors.
CliOutcome run_command(const std::vector<std::string>& args);

// Process entry point: runs the command and prints its streams.
int run_cli(int argc, char** argv);

}  // namespace nccr
