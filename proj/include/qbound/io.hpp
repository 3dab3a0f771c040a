#pragma once

// Serialization: JSON encodings of reports and models, CSV table output, and
// numeric formatting helpers shared by the command-line tool.

#include "qbound/bounds.hpp"
#include "qbound/estimators.hpp"
#include "qbound/models.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qbound {

inline constexpr const char* kVersion = "1.0.0";

// Shortest decimal form that round-trips an IEEE double (up to 17 significant
// digits). Used for every numeric field we serialize.
std::string format_double(double x);

// Writes RFC 4180 rows (CRLF line endings, quoting only where required).
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  // Optional leading comment line (e.g. a tool-version stamp).
  void write_comment(const std::string& text);
  void write_row(const std::vector<std::string>& fields);

  static std::string escape_field(const std::string& field);

 private:
  std::ostream& os_;
};

std::string to_string(Flavor flavor);
std::string to_string(BoundKind kind);
Flavor flavor_from_string(const std::string& name);

nlohmann::json to_json(const EvalSpec& spec);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const EstimatorReport& report);

nlohmann::json matrix_to_json(const cmatrix& m);
cmatrix matrix_from_json(const nlohmann::json& j);

// Parses a model description. Supported forms:
//   {"builtin": "concurrence"}
//   {"builtin": "discrete", "dim_cut": 16}
//   {"builtin": "gaussian2", "sigma2": 1.0, "truncation": 60}
//   {"builtin": "gaussian_singular_scalar", "sigma2": ..., "truncation": ...}
//   {"builtin": "gaussian_singular_vector", "sigma2": ..., "truncation": ...}
//   {"dim": d, "theta_grid": [...], "states": [matrix, ...]}
// Explicit matrices are lists of rows whose entries are [re, im] pairs.
ParametricModel model_from_json(const nlohmann::json& j);
ParametricModel model_from_json_file(const std::string& path);

// Explicit-grid encoding of a scalar model sampled at `grid`; inverse of
// model_from_json for the explicit form.
nlohmann::json model_to_json(const ParametricModel& model, const std::vector<double>& grid);

// One CSV row per report, matching the columns of the simulate command:
// theta,n,trials,bias,mse,n_times_mse,std_error,seed
void write_estimator_csv(std::ostream& os, const std::vector<double>& thetas,
                         const std::vector<EstimatorReport>& reports, bool version_comment = true);

}  // namespace qbound
