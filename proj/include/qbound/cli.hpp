#pragma once

// Command implementations behind the qbound executable. The thin main() in
// tools/ parses flags into a RunConfig and dispatches through run_command so
// the full command surface stays testable in-process.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qbound {

struct RunConfig {
  enum class Command { bound, simulate, reproduce, check };
  Command command = Command::bound;

  // Model selection: builtin name or path to a model JSON file.
  std::string model;
  double sigma2 = 1.0;
  int truncation = 60;
  int dim_cut = 16;

  // Evaluation point(s): explicit coordinates, or a lo:hi:step scalar grid.
  std::vector<double> theta;
  std::optional<std::array<double, 3>> theta_grid;

  // Bound selection.
  std::string kind = "qhcrk";  // qcr | qhcrk | qk | multi | asympt_discrete
  std::string flavor = "sld";
  std::vector<double> delta;
  std::vector<double> t;
  int order = 1;
  std::string weight = "identity";  // identity | diag:a,b,...
  std::string estimand = "auto";    // auto | abs | coordinate:i

  // Simulation.
  std::string estimator = "two-step";  // two-step | discrete-exact | discrete-mc
  long n = 10000;
  long trials = 10000;
  std::uint64_t seed = 1;

  // Reproduction target: fig1 | fig2 | fig3 | table_discrete.
  std::string figure;

  // Output.
  std::string output;        // empty = stdout
  std::string format = "";   // csv | json; empty = per-command default

  // Check options.
  bool quick = false;
  std::string extra_model;
  std::vector<std::string> only;
};

// All commands write their artifact to config.output (stdout when empty) and
// return a process exit code: 0 success, 1 failing checks, 2 config/domain
// errors. run_command translates exceptions into the exit-2 contract and
// prints a single-line `error: ...` diagnostic to `err`.
int cmd_bound(const RunConfig& config, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out);
int cmd_reproduce(const RunConfig& config, std::ostream& out);
int cmd_check(const RunConfig& config, std::ostream& out);

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qbound
