#pragma once

#include <string>

#include "folkit/script.hpp"

namespace folkit {

// Knobs shared by every command in a run.  A command-level flag overrides
// the matching option for that command only.  samples and seed are echoed
// into the report for reproducibility; no current command draws randomness.
struct RunOptions {
  int order = 8;
  int bound = 50;
  int samples = 20;
  long seed = 0;
};

// Result of executing a script: the structured report serialized as JSON,
// a plain-text rendering of the same results, and the process exit code.
// Verdicts are identical across the two renderings by construction, since
// both are derived from one report object.
struct RunOutcome {
  std::string json;
  std::string text;
  int exit_code = 0;
};

// Executes the statements in order.  A module error inside a command stops
// the run, lands in the report as a structured error entry, and sets the
// exit code to the error class; the JSON stays well formed either way.
RunOutcome run_script(const Script& script, const RunOptions& opts);

}  // namespace folkit
