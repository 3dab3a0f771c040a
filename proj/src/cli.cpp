#include "qbound/cli.hpp"

#include "qbound/bounds.hpp"
#include "qbound/checks.hpp"
#include "qbound/estimators.hpp"
#include "qbound/gaussian.hpp"
#include "qbound/io.hpp"
#include "qbound/reproduce.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace qbound {

namespace {

ParametricModel resolve_model(const RunConfig& config) {
  const std::string& name = config.model;
  if (name.empty()) throw ConfigError("a --model is required");
  if (name == "concurrence") return concurrence_model();
  if (name == "discrete") return discrete_model_family(config.dim_cut);
  if (name == "gaussian2") return gaussian_mean_model(config.sigma2, config.truncation);
  if (name == "gaussian_singular_scalar") {
    return gaussian_singular_submodel(SubmodelKind::scalar, config.sigma2, config.truncation);
  }
  if (name == "gaussian_singular_vector") {
    return gaussian_singular_submodel(SubmodelKind::vector, config.sigma2, config.truncation);
  }
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
    return model_from_json_file(name);
  }
  throw ConfigError("unknown builtin model '" + name + "'");
}

EstimandFunction resolve_estimand(const RunConfig& config, const ParametricModel& model) {
  const std::string& name = config.estimand;
  if (name == "auto") {
    return model.label() == "concurrence" ? abs_estimand() : coordinate_estimand(0);
  }
  if (name == "abs") return abs_estimand();
  if (name.rfind("coordinate:", 0) == 0) {
    const std::size_t i = std::stoul(name.substr(11));
    if (i >= model.param_dim()) throw ConfigError("estimand coordinate out of range");
    return coordinate_estimand(i);
  }
  throw ConfigError("unknown estimand '" + name + "' (expected auto, abs or coordinate:i)");
}

// Evaluation points: explicit --theta, or a scalar lo:hi:step sweep.
std::vector<ParamPoint> resolve_points(const RunConfig& config, const ParametricModel& model) {
  if (config.theta_grid) {
    if (model.param_dim() != 1) throw ConfigError("--theta-grid requires a scalar model");
    const auto [lo, hi, step] = *config.theta_grid;
    if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw ConfigError("--theta-grid expects lo:hi:step with step > 0");
    }
    std::vector<ParamPoint> points;
    for (long i = 0;; ++i) {
      const double x = lo + step * static_cast<double>(i);
      if (x > hi + step * 1e-9) break;
      points.emplace_back(x);
    }
    if (points.empty()) throw ConfigError("parameter grid is empty");
    return points;
  }
  if (!config.theta.empty()) {
    if (config.theta.size() != model.param_dim()) {
      throw ConfigError("--theta expects " + std::to_string(model.param_dim()) +
                        " coordinate(s) for this model");
    }
    return {ParamPoint(config.theta)};
  }
  if (model.domain().is_discrete()) {
    throw ConfigError("this model requires an explicit --theta");
  }
  return {ParamPoint(std::vector<double>(model.param_dim(), 0.0))};
}

EvalSpec resolve_spec(const RunConfig& config, const ParametricModel& model) {
  if (config.kind == "qcr" || config.delta.empty()) return DerivativeSpec{};
  std::vector<double> delta = config.delta;
  if (delta.size() == 1 && model.param_dim() > 1) {
    delta.assign(model.param_dim(), delta[0]);
  }
  std::vector<double> t = config.t;
  if (t.empty()) t.assign(delta.size(), 1.0);
  if (t.size() == 1 && delta.size() > 1) t.assign(delta.size(), t[0]);
  if (t.size() != delta.size()) throw ConfigError("--t must match --delta in length");
  DifferenceSpec spec;
  spec.delta = std::move(delta);
  spec.t = std::move(t);
  spec.order = config.order;
  return spec;
}

rmatrix resolve_weight(const RunConfig& config, std::size_t m) {
  if (config.weight == "identity") {
    return rmatrix::Identity(static_cast<index_t>(m), static_cast<index_t>(m));
  }
  if (config.weight.rfind("diag:", 0) == 0) {
    std::vector<double> entries;
    std::stringstream ss(config.weight.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(std::stod(item));
    if (entries.size() != m) throw ConfigError("--G diag list must have one entry per parameter");
    rmatrix g = rmatrix::Zero(static_cast<index_t>(m), static_cast<index_t>(m));
    for (std::size_t i = 0; i < m; ++i) g(static_cast<index_t>(i), static_cast<index_t>(i)) =
        entries[i];
    return g;
  }
  throw ConfigError("unknown weight '" + config.weight + "' (expected identity or diag:...)");
}

double scalar_delta(const RunConfig& config) {
  if (config.delta.size() != 1) throw ConfigError("this bound kind expects a single --delta");
  return config.delta[0];
}

BoundReport compute_bound(const RunConfig& config, const ParametricModel& model,
                          const ParamPoint& point) {
  if (config.kind == "qcr" || config.kind == "qhcrk") {
    return qhcrk_bound(model, point, resolve_estimand(config, model),
                       resolve_spec(config, model), flavor_from_string(config.flavor));
  }
  if (config.kind == "qk") {
    return qk_bound(model, point, resolve_estimand(config, model), scalar_delta(config),
                    config.order, flavor_from_string(config.flavor));
  }
  if (config.kind == "multi") {
    return multiparam_bound(model, point, resolve_weight(config, model.param_dim()),
                            resolve_spec(config, model), flavor_from_string(config.flavor));
  }
  if (config.kind == "asympt_discrete") {
    return discrete_asymptotic_exponent(model, point, scalar_delta(config));
  }
  throw ConfigError("unknown bound kind '" + config.kind + "'");
}

// Runs `body` against the configured output stream (file or stdout).
int with_output(const RunConfig& config, std::ostream& out,
                const std::function<void(std::ostream&)>& body) {
  if (config.output.empty()) {
    body(out);
    return 0;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + config.output + "'");
  body(file);
  return 0;
}

std::string csv_double(double x) { return format_double(x); }

}  // namespace

int cmd_bound(const RunConfig& config, std::ostream& out) {
  const ParametricModel model = resolve_model(config);
  const std::vector<ParamPoint> points = resolve_points(config, model);
  std::vector<BoundReport> reports;
  reports.reserve(points.size());
  for (const ParamPoint& p : points) reports.push_back(compute_bound(config, model, p));

  const std::string format = config.format.empty() ? "json" : config.format;
  return with_output(config, out, [&](std::ostream& os) {
    if (format == "json") {
      if (reports.size() == 1) {
        os << to_json(reports[0]).dump(2) << "\n";
        return;
      }
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        nlohmann::json item = to_json(reports[i]);
        item["theta"] = points[i].coords;
        arr.push_back(std::move(item));
      }
      os << arr.dump(2) << "\n";
    } else if (format == "csv") {
      CsvWriter csv(os);
      csv.write_comment(std::string("qbound ") + kVersion);
      csv.write_row({"theta", "value", "infinite", "kind", "flavor"});
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string theta_field;
        for (std::size_t c = 0; c < points[i].coords.size(); ++c) {
          if (c) theta_field += ";";
          theta_field += csv_double(points[i].coords[c]);
        }
        csv.write_row({theta_field, csv_double(reports[i].value),
                       reports[i].infinite ? "true" : "false", to_string(reports[i].kind),
                       to_string(reports[i].flavor)});
      }
    } else {
      throw ConfigError("unknown format '" + format + "' (expected csv or json)");
    }
  });
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  if (config.trials < 1 && config.estimator != "discrete-exact") {
    throw ConfigError("simulate requires --trials >= 1");
  }
  if (config.n < 1) throw ConfigError("simulate requires --n >= 1");

  ParametricModel model = config.estimator == "two-step"
                              ? concurrence_model()
                              : discrete_model_family(config.dim_cut);
  const std::vector<ParamPoint> points = resolve_points(config, model);

  std::vector<double> thetas;
  std::vector<EstimatorReport> reports;
  for (const ParamPoint& p : points) {
    const double theta = p.scalar();
    if (config.estimator == "two-step") {
      reports.push_back(
          simulate_concurrence_estimator(theta, config.n, config.trials, config.seed));
    } else if (config.estimator == "discrete-exact") {
      const Povm pvm = observable_to_pvm(discrete_optimal_observable(config.dim_cut));
      reports.push_back(exact_bias_mse(model, p, coordinate_estimand(0), pvm));
    } else if (config.estimator == "discrete-mc") {
      const Povm pvm = observable_to_pvm(discrete_optimal_observable(config.dim_cut));
      reports.push_back(simulate_povm_sampling(model, p, coordinate_estimand(0), pvm, config.n,
                                               config.trials, config.seed));
    } else {
      throw ConfigError("unknown estimator '" + config.estimator + "'");
    }
    thetas.push_back(theta);
  }

  const std::string format = config.format.empty() ? "csv" : config.format;
  return with_output(config, out, [&](std::ostream& os) {
    if (format == "csv") {
      write_estimator_csv(os, thetas, reports);
    } else if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        nlohmann::json item = to_json(reports[i]);
        item["theta"] = thetas[i];
        arr.push_back(std::move(item));
      }
      os << arr.dump(2) << "\n";
    } else {
      throw ConfigError("unknown format '" + format + "' (expected csv or json)");
    }
  });
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
  const bool known = config.figure == "fig1" || config.figure == "fig2" ||
                     config.figure == "fig3" || config.figure == "table_discrete";
  if (!known) {
    throw ConfigError("unknown reproduction target '" + config.figure +
                      "' (expected fig1, fig2, fig3 or table_discrete)");
  }
  return with_output(config, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.write_comment(std::string("qbound ") + kVersion);
    if (config.figure == "fig1") {
      csv.write_row({"delta1", "bound"});
      for (const Fig1Row& row : fig1_data()) {
        csv.write_row({csv_double(row.delta1), csv_double(row.bound)});
      }
    } else if (config.figure == "fig2") {
      csv.write_row({"t2", "sigma2", "rld_bound"});
      for (const Fig2Row& row : fig2_data()) {
        csv.write_row({csv_double(row.t2), csv_double(row.sigma2), csv_double(row.rld_bound)});
      }
    } else if (config.figure == "fig3") {
      csv.write_row({"theta1", "theta2", "bound_a", "bound_b", "bound_c"});
      for (const Fig3Row& row : fig3_data()) {
        csv.write_row({csv_double(row.theta1), csv_double(row.theta2), csv_double(row.bound_a),
                       csv_double(row.bound_b), csv_double(row.bound_c)});
      }
    } else {
      csv.write_row({"theta", "exponent", "relative_entropy", "closed_form_mse", "exact_mse"});
      for (const DiscreteTableRow& row : discrete_table_data()) {
        csv.write_row({std::to_string(row.theta), csv_double(row.exponent),
                       csv_double(row.relative_entropy), csv_double(row.closed_form_mse),
                       csv_double(row.exact_mse)});
      }
    }
  });
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  CheckOptions options;
  options.quick = config.quick;
  options.extra_model_path = config.extra_model;
  options.only = config.only;
  const std::vector<CheckResult> results = run_acceptance_checks(options);
  if (results.empty()) {
    throw ConfigError("no checks match the --only filter");
  }

  int failed = 0;
  const int rc = with_output(config, out, [&](std::ostream& os) {
    for (const CheckResult& r : results) {
      os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.description << " — "
         << r.detail << "\n";
      if (!r.passed) ++failed;
    }
    os << results.size() - failed << " passed, " << failed << " failed\n";
  });
  if (rc != 0) return rc;
  return failed == 0 ? 0 : 1;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::bound:
        return cmd_bound(config, out);
      case RunConfig::Command::simulate:
        return cmd_simulate(config, out);
      case RunConfig::Command::reproduce:
        return cmd_reproduce(config, out);
      case RunConfig::Command::check:
        return cmd_check(config, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: internal: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace qbound
