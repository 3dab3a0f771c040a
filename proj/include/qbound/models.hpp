#pragma once

// Parametric state models, difference/derivative operators acting on models
// and scalar estimand functions, plus the built-in finite-dimensional model
// families (Bell-diagonal concurrence model, block-diagonal discrete model).

#include "qbound/matcore.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qbound {

// A parameter point; scalar models use dim() == 1.
struct ParamPoint {
  std::vector<double> coords;

  ParamPoint() = default;
  ParamPoint(double x) : coords{x} {}  // NOLINT: implicit scalar points are intended
  ParamPoint(std::initializer_list<double> xs) : coords(xs) {}
  explicit ParamPoint(std::vector<double> xs) : coords(std::move(xs)) {}

  std::size_t dim() const noexcept { return coords.size(); }
  double operator[](std::size_t i) const { return coords.at(i); }

  // The single coordinate of a scalar point.
  double scalar() const;

  // Copy with coordinate `i` shifted by `amount`.
  ParamPoint shifted(std::size_t i, double amount) const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double x) const;
};

// Parameter domain: either a product of per-coordinate intervals, or a set of
// isolated scalar points (integer ranges, explicit grids).
class Domain {
 public:
  static Domain reals(std::size_t m);
  static Domain box(std::vector<Interval> intervals);
  static Domain integer_points(long lo, long hi);
  static Domain point_set(std::vector<double> points);  // sorted ascending

  std::size_t dim() const noexcept;
  bool is_discrete() const noexcept { return discrete_; }
  bool contains(const ParamPoint& p) const;

  // For discrete scalar domains: the domain point within matching tolerance
  // of x, if any.
  std::optional<double> nearest_point(double x) const;

  // For discrete scalar domains: true when a and b are both domain points with
  // no domain point strictly between them.
  bool adjacent(double a, double b) const;

 private:
  Domain() = default;
  bool discrete_ = false;
  std::vector<Interval> intervals_;  // continuous case
  std::vector<double> points_;       // discrete case, sorted
};

// A family of density matrices indexed by a parameter point.
class ParametricModel {
 public:
  ParametricModel(std::size_t param_dim, Domain domain, index_t hilbert_dim, std::string label,
                  std::function<DensityMatrix(const ParamPoint&)> state_fn);

  std::size_t param_dim() const noexcept { return param_dim_; }
  const Domain& domain() const noexcept { return domain_; }
  index_t dim() const noexcept { return hilbert_dim_; }
  const std::string& label() const noexcept { return label_; }

  // Evaluates the family; throws DomainError when the point is outside the
  // domain or has the wrong dimension.
  DensityMatrix state(const ParamPoint& theta) const;

 private:
  std::size_t param_dim_;
  Domain domain_;
  index_t hilbert_dim_;
  std::string label_;
  std::function<DensityMatrix(const ParamPoint&)> state_fn_;
};

// A scalar function of the parameter to be estimated.
struct EstimandFunction {
  std::function<double(const ParamPoint&)> g_fn;
  std::string label;

  double operator()(const ParamPoint& p) const { return g_fn(p); }
};

// g(theta) = |theta| (scalar models).
EstimandFunction abs_estimand();
// g(theta) = theta^i.
EstimandFunction coordinate_estimand(std::size_t i = 0);

// Configuration of the two-sided difference quotient
//   (f(theta + t*delta*e_i) - f(theta - (1-t)*delta*e_i)) / delta
// per coordinate, and of the order-k one-sided difference used by the
// higher-order bounds (scalar models).
struct DifferenceSpec {
  std::vector<double> delta;  // nonzero, one entry per coordinate
  std::vector<double> t;      // in [0, 1], one entry per coordinate
  int order = 1;              // k >= 1, scalar models only

  DifferenceSpec() = default;
  static DifferenceSpec scalar(double delta, double t, int order = 1);
  static DifferenceSpec vector(std::vector<double> delta, std::vector<double> t);

  void validate(std::size_t param_dim) const;  // throws DomainError when malformed
};

// Configuration of the numerical derivative used when a model is treated as
// differentiable: central difference of step `step`, refined by one
// Richardson extrapolation step when `richardson` is set.
struct DerivativeSpec {
  double step = 1e-5;
  bool richardson = true;
};

// Either a finite-difference or a derivative evaluation.
using EvalSpec = std::variant<DifferenceSpec, DerivativeSpec>;

// Two-sided difference quotient of the model along coordinate `coord`.
// The result is traceless within 1e-10 and exactly Hermitian.
HermMatrix state_difference(const ParametricModel& model, const ParamPoint& theta,
                            const DifferenceSpec& spec, std::size_t coord = 0);

// Order-k one-sided difference of a scalar model:
//   (-1)^k delta^{-k} sum_i (-1)^i C(k,i) rho_{theta + i*delta}.
HermMatrix kth_difference(const ParametricModel& model, const ParamPoint& theta, double delta,
                          int k);

// Numerical derivative of the model along coordinate `coord`.
HermMatrix state_derivative(const ParametricModel& model, const ParamPoint& theta,
                            std::size_t coord = 0, const DerivativeSpec& spec = {});

// Difference quotients of a scalar estimand, matching the state versions.
double scalar_difference(const EstimandFunction& g, const ParamPoint& theta,
                         const DifferenceSpec& spec, std::size_t coord = 0);
double kth_scalar_difference(const EstimandFunction& g, const ParamPoint& theta, double delta,
                             int k);
double scalar_derivative(const EstimandFunction& g, const ParamPoint& theta,
                         std::size_t coord = 0, const DerivativeSpec& spec = {});

// Bell-diagonal qubit family rho_theta = diag((1+theta)/2, (1-theta)/2) on the
// two-dimensional support, theta in (-1, 1).
ParametricModel concurrence_model();

// Block-diagonal state of the discrete integer-parameter family, embedded in
// a dim_cut-dimensional space. theta >= 1; dim_cut must leave at least one
// empty 2x2 block after the support.
DensityMatrix discrete_model(long theta, index_t dim_cut);

// The discrete family as a model over its isolated integer domain.
ParametricModel discrete_model_family(index_t dim_cut);

}  // namespace qbound
