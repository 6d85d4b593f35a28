#pragma once

#include <string>

namespace morrey {

struct RunResult {
  int exit_code = 0;      // 0 success, 2 config error, 1 internal error
  std::string report;     // complete output document; empty on error
  std::string error;      // diagnostic for stderr
};

// Executes one JSON job config (tasks: verdict, norms, sweep, witness,
// selftest) and renders the report in the requested format ("json", or
// "csv" for sweeps). The report is assembled fully in memory so a failing
// run never leaves partial output.
RunResult run_config_text(const std::string& config_text,
                          const std::string& format, int jobs);

}  // namespace morrey
