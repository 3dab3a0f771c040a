#include "qbound/io.hpp"

#include "qbound/gaussian.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace qbound {

std::string format_double(double x) {
  // Shortest %.{p}g form that parses back to the same bits, p <= 17.
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

void CsvWriter::write_comment(const std::string& text) { os_ << "# " << text << "\r\n"; }

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os_ << ',';
    os_ << escape_field(fields[i]);
  }
  os_ << "\r\n";
}

std::string CsvWriter::escape_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_string(Flavor flavor) { return flavor == Flavor::sld ? "sld" : "rld"; }

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::qcr: return "qcr";
    case BoundKind::qhcrk: return "qhcrk";
    case BoundKind::qk: return "qk";
    case BoundKind::multi: return "multi";
    case BoundKind::asympt_discrete: return "asympt_discrete";
    case BoundKind::asympt_cont: return "asympt_cont";
  }
  return "unknown";
}

Flavor flavor_from_string(const std::string& name) {
  if (name == "sld") return Flavor::sld;
  if (name == "rld") return Flavor::rld;
  throw ConfigError("unknown flavor '" + name + "' (expected sld or rld)");
}

nlohmann::json to_json(const EvalSpec& spec) {
  nlohmann::json j;
  if (const auto* diff = std::get_if<DifferenceSpec>(&spec)) {
    j["type"] = "difference";
    j["delta"] = diff->delta;
    j["t"] = diff->t;
    j["order"] = diff->order;
  } else {
    const auto& deriv = std::get<DerivativeSpec>(spec);
    j["type"] = "derivative";
    j["step"] = deriv.step;
    j["richardson"] = deriv.richardson;
  }
  return j;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j;
  j["value"] = report.value;
  j["infinite"] = report.infinite;
  j["kind"] = to_string(report.kind);
  j["flavor"] = to_string(report.flavor);
  j["spec"] = to_json(report.spec);
  if (report.weight) {
    nlohmann::json rows = nlohmann::json::array();
    for (index_t r = 0; r < report.weight->rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (index_t c = 0; c < report.weight->cols(); ++c) row.push_back((*report.weight)(r, c));
      rows.push_back(std::move(row));
    }
    j["weight"] = std::move(rows);
  }
  j["diagnostics"] = {{"matrix_dim", report.diagnostics.matrix_dim},
                      {"pinv_rank", report.diagnostics.pinv_rank},
                      {"condition", report.diagnostics.condition}};
  return j;
}

nlohmann::json to_json(const EstimatorReport& report) {
  nlohmann::json j;
  j["bias"] = report.bias;
  j["mse"] = report.mse;
  j["mode"] = report.mode == EvalMode::exact ? "exact" : "monte_carlo";
  j["n_copies"] = report.n_copies;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["std_error"] = report.std_error;
  return j;
}

nlohmann::json matrix_to_json(const cmatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (index_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (index_t c = 0; c < m.cols(); ++c) {
      row.push_back(nlohmann::json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

cmatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix JSON must be a non-empty array");
  const index_t rows = static_cast<index_t>(j.size());
  const index_t cols = static_cast<index_t>(j.at(0).size());
  cmatrix m(rows, cols);
  for (index_t r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<index_t>(row.size()) != cols) {
      throw ConfigError("matrix JSON rows have inconsistent lengths");
    }
    for (index_t c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2) {
        throw ConfigError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = complex_t(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

namespace {

ParametricModel builtin_model_from_json(const nlohmann::json& j) {
  const std::string name = j.at("builtin").get<std::string>();
  if (name == "concurrence") return concurrence_model();
  if (name == "discrete") {
    const index_t dim_cut = j.value("dim_cut", 16);
    return discrete_model_family(dim_cut);
  }
  const double sigma2 = j.value("sigma2", 1.0);
  if (name == "gaussian2") return gaussian_mean_model(sigma2, j.value("truncation", 60));
  if (name == "gaussian_singular_scalar") {
    return gaussian_singular_submodel(SubmodelKind::scalar, sigma2, j.value("truncation", 20));
  }
  if (name == "gaussian_singular_vector") {
    return gaussian_singular_submodel(SubmodelKind::vector, sigma2, j.value("truncation", 20));
  }
  throw ConfigError("unknown builtin model '" + name + "'");
}

}  // namespace

ParametricModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("model JSON must be an object");
  if (j.contains("builtin")) return builtin_model_from_json(j);
  if (!j.contains("dim") || !j.contains("theta_grid") || !j.contains("states")) {
    throw ConfigError("explicit model JSON requires dim, theta_grid and states");
  }
  const index_t dim = j.at("dim").get<index_t>();
  auto grid = std::make_shared<std::vector<double>>(j.at("theta_grid").get<std::vector<double>>());
  if (grid->empty()) throw ConfigError("theta_grid must be non-empty");
  if (!std::is_sorted(grid->begin(), grid->end())) {
    throw ConfigError("theta_grid must be sorted ascending");
  }
  const auto& states_json = j.at("states");
  if (states_json.size() != grid->size()) {
    throw ConfigError("states and theta_grid must have equal length");
  }
  auto states = std::make_shared<std::vector<DensityMatrix>>();
  states->reserve(grid->size());
  for (const auto& sj : states_json) {
    cmatrix m = matrix_from_json(sj);
    if (m.rows() != dim || m.cols() != dim) {
      throw ConfigError("state matrix does not match declared dim");
    }
    states->push_back(DensityMatrix::from_matrix(m));
  }
  Domain domain = Domain::point_set(*grid);
  const std::string label = j.value("label", std::string("custom"));
  auto state_fn = [grid, states, domain](const ParamPoint& p) {
    const auto snapped = domain.nearest_point(p.scalar());
    if (!snapped) throw DomainError("parameter not on the model grid");
    const auto idx = std::lower_bound(grid->begin(), grid->end(), *snapped) - grid->begin();
    return (*states)[static_cast<std::size_t>(idx)];
  };
  return ParametricModel(1, Domain::point_set(*grid), dim, label, std::move(state_fn));
}

ParametricModel model_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse model file '" + path + "': " + e.what());
  }
  try {
    return model_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed model file '" + path + "': " + e.what());
  }
}

nlohmann::json model_to_json(const ParametricModel& model, const std::vector<double>& grid) {
  if (model.param_dim() != 1) throw ConfigError("only scalar models serialize to a grid");
  nlohmann::json j;
  j["dim"] = model.dim();
  j["label"] = model.label();
  j["theta_grid"] = grid;
  nlohmann::json states = nlohmann::json::array();
  for (double theta : grid) states.push_back(matrix_to_json(model.state(theta).mat()));
  j["states"] = std::move(states);
  return j;
}

void write_estimator_csv(std::ostream& os, const std::vector<double>& thetas,
                         const std::vector<EstimatorReport>& reports, bool version_comment) {
  if (thetas.size() != reports.size()) {
    throw InvalidInputError("estimator CSV requires one theta per report");
  }
  CsvWriter csv(os);
  if (version_comment) csv.write_comment(std::string("qbound ") + kVersion);
  csv.write_row({"theta", "n", "trials", "bias", "mse", "n_times_mse", "std_error", "seed"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const EstimatorReport& r = reports[i];
    csv.write_row({format_double(thetas[i]), std::to_string(r.n_copies),
                   std::to_string(r.trials), format_double(r.bias), format_double(r.mse),
                   format_double(static_cast<double>(r.n_copies) * r.mse),
                   format_double(r.std_error), std::to_string(r.seed)});
  }
}

}  // namespace qbound
