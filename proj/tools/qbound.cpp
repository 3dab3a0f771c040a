// qbound: lower bounds, estimator simulations and data-reproduction sweeps
// for finite-dimensional and truncated Gaussian quantum statistical models.

#include "qbound/cli.hpp"
#include "qbound/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

// Parses "lo:hi:step" into a grid triple.
std::array<double, 3> parse_grid(const std::string& text) {
  std::array<double, 3> grid{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t colon = text.find(':', start);
    const bool last = (i == 2);
    if (last != (colon == std::string::npos)) {
      throw CLI::ValidationError("--theta-grid", "expected lo:hi:step");
    }
    const std::string part = text.substr(start, last ? std::string::npos : colon - start);
    try {
      grid[static_cast<std::size_t>(i)] = std::stod(part);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--theta-grid", "expected lo:hi:step with numeric fields");
    }
    start = colon + 1;
  }
  return grid;
}

void add_model_flags(CLI::App* cmd, qbound::RunConfig& config) {
  cmd->add_option("--model", config.model,
                  "builtin model (concurrence, discrete, gaussian2, gaussian_singular_scalar, "
                  "gaussian_singular_vector) or path to a model .json file")
      ->required();
  cmd->add_option("--sigma2", config.sigma2, "per-quadrature variance of the Gaussian models");
  cmd->add_option("--truncation", config.truncation, "Fock-space truncation level");
  cmd->add_option("--dim-cut", config.dim_cut, "matrix dimension of the discrete model");
}

void add_point_flags(CLI::App* cmd, qbound::RunConfig& config, std::string& grid_text) {
  cmd->add_option("--theta", config.theta, "parameter coordinates")->expected(-1);
  cmd->add_option("--theta-grid", grid_text, "scalar parameter sweep as lo:hi:step");
}

void add_output_flags(CLI::App* cmd, qbound::RunConfig& config) {
  cmd->add_option("-o,--output", config.output, "output file (default: stdout)");
  cmd->add_option("--format", config.format, "output format: csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  qbound::RunConfig config;
  std::string grid_text;

  CLI::App app{"lower bounds and estimator simulations for quantum statistical models"};
  app.set_version_flag("--version", std::string("qbound ") + qbound::kVersion);
  app.require_subcommand(1);

  CLI::App* bound = app.add_subcommand("bound", "compute a lower bound at a point or grid");
  add_model_flags(bound, config);
  add_point_flags(bound, config, grid_text);
  bound->add_option("--kind", config.kind,
                    "bound kind: qcr, qhcrk, qk, multi or asympt_discrete");
  bound->add_option("--flavor", config.flavor, "logarithmic-derivative flavor: sld or rld");
  bound->add_option("--delta", config.delta, "difference step(s); omit for derivative specs")
      ->expected(-1);
  bound->add_option("--t", config.t, "difference split weight(s) in [0, 1]")->expected(-1);
  bound->add_option("--order", config.order, "number of difference orders for kind qk");
  bound->add_option("--G", config.weight, "weight matrix: identity or diag:a,b,...");
  bound->add_option("--estimand", config.estimand, "estimand: auto, abs or coordinate:i");
  add_output_flags(bound, config);

  CLI::App* simulate = app.add_subcommand("simulate", "run an estimator exactly or by sampling");
  simulate->add_option("--estimator", config.estimator,
                       "estimator: two-step, discrete-exact or discrete-mc");
  add_point_flags(simulate, config, grid_text);
  simulate->add_option("--n", config.n, "copies per trial");
  simulate->add_option("--trials", config.trials, "Monte-Carlo trials");
  simulate->add_option("--seed", config.seed, "RNG seed");
  simulate->add_option("--dim-cut", config.dim_cut, "matrix dimension of the discrete model");
  add_output_flags(simulate, config);

  CLI::App* reproduce = app.add_subcommand("reproduce", "emit a pre-wired data sweep as CSV");
  reproduce->add_option("figure", config.figure, "fig1, fig2, fig3 or table_discrete")
      ->required();
  add_output_flags(reproduce, config);

  CLI::App* check = app.add_subcommand("check", "run the self-check suite");
  check->add_flag("--quick", config.quick, "skip Monte-Carlo checks");
  check->add_option("--extra-model", config.extra_model, "model JSON file to validate");
  check->add_option("--only", config.only, "run only the listed check ids")->expected(-1);
  add_output_flags(check, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (bound->parsed()) config.command = qbound::RunConfig::Command::bound;
  if (simulate->parsed()) config.command = qbound::RunConfig::Command::simulate;
  if (reproduce->parsed()) config.command = qbound::RunConfig::Command::reproduce;
  if (check->parsed()) config.command = qbound::RunConfig::Command::check;

  if (!grid_text.empty()) {
    try {
      config.theta_grid = parse_grid(grid_text);
    } catch (const CLI::Error&) {
      std::cerr << "error: --theta-grid expects lo:hi:step\n";
      return 2;
    }
  }

  return qbound::run_command(config, std::cout, std::cerr);
}
