#pragma once

// Self-check registry behind `qbound check` and the acceptance test binary.
// Each check pins its own tolerances and returns a pass/fail verdict with a
// human-readable detail string; nothing here is configurable at run time
// beyond skipping the Monte-Carlo check and adding an extra model file.

#include <string>
#include <vector>

namespace qbound {

struct CheckResult {
  std::string id;           // stable identifier, e.g. "A03"
  std::string description;  // one-line summary of the claim being checked
  bool passed = false;
  std::string detail;       // measured values / first failure
};

struct CheckOptions {
  bool quick = false;              // skip Monte-Carlo checks
  std::string extra_model_path;    // optional model JSON to validate
  std::vector<std::string> only;   // run only these ids (empty = all)
};

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options = {});

}  // namespace qbound
