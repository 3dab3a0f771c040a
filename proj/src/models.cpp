#include "qbound/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace qbound {

double ParamPoint::scalar() const {
  if (coords.size() != 1) {
    throw DomainError("expected a scalar parameter point, got dimension " +
                      std::to_string(coords.size()));
  }
  return coords[0];
}

ParamPoint ParamPoint::shifted(std::size_t i, double amount) const {
  ParamPoint out = *this;
  out.coords.at(i) += amount;
  return out;
}

bool Interval::contains(double x) const {
  if (!std::isfinite(x)) return false;
  if (x < lo || (lo_open && x == lo)) return false;
  if (x > hi || (hi_open && x == hi)) return false;
  return true;
}

Domain Domain::reals(std::size_t m) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> iv(m, Interval{-inf, inf, true, true});
  return box(std::move(iv));
}

Domain Domain::box(std::vector<Interval> intervals) {
  Domain d;
  d.discrete_ = false;
  d.intervals_ = std::move(intervals);
  return d;
}

Domain Domain::integer_points(long lo, long hi) {
  std::vector<double> pts;
  for (long n = lo; n <= hi; ++n) pts.push_back(static_cast<double>(n));
  return point_set(std::move(pts));
}

Domain Domain::point_set(std::vector<double> points) {
  if (points.empty()) throw DomainError("discrete domain must contain at least one point");
  if (!std::is_sorted(points.begin(), points.end())) {
    throw DomainError("discrete domain points must be sorted ascending");
  }
  Domain d;
  d.discrete_ = true;
  d.points_ = std::move(points);
  return d;
}

std::size_t Domain::dim() const noexcept { return discrete_ ? 1 : intervals_.size(); }

std::optional<double> Domain::nearest_point(double x) const {
  if (!discrete_ || !std::isfinite(x)) return std::nullopt;
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  double best = std::numeric_limits<double>::quiet_NaN();
  double best_dist = std::numeric_limits<double>::infinity();
  if (it != points_.end()) {
    best = *it;
    best_dist = std::abs(*it - x);
  }
  if (it != points_.begin() && std::abs(*(it - 1) - x) < best_dist) {
    best = *(it - 1);
    best_dist = std::abs(*(it - 1) - x);
  }
  const double scale = std::max(1.0, std::abs(best));
  if (best_dist > 1e-9 * scale) return std::nullopt;
  return best;
}

bool Domain::contains(const ParamPoint& p) const {
  if (p.dim() != dim()) return false;
  for (double x : p.coords) {
    if (!std::isfinite(x)) return false;
  }
  if (discrete_) return nearest_point(p.coords[0]).has_value();
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!intervals_[i].contains(p.coords[i])) return false;
  }
  return true;
}

bool Domain::adjacent(double a, double b) const {
  if (!discrete_) return false;
  const auto pa = nearest_point(a);
  const auto pb = nearest_point(b);
  if (!pa || !pb) return false;
  const auto ia = std::lower_bound(points_.begin(), points_.end(), *pa) - points_.begin();
  const auto ib = std::lower_bound(points_.begin(), points_.end(), *pb) - points_.begin();
  return std::abs(ia - ib) == 1;
}

ParametricModel::ParametricModel(std::size_t param_dim, Domain domain, index_t hilbert_dim,
                                 std::string label,
                                 std::function<DensityMatrix(const ParamPoint&)> state_fn)
    : param_dim_(param_dim),
      domain_(std::move(domain)),
      hilbert_dim_(hilbert_dim),
      label_(std::move(label)),
      state_fn_(std::move(state_fn)) {}

DensityMatrix ParametricModel::state(const ParamPoint& theta) const {
  if (theta.dim() != param_dim_) {
    throw DomainError("model '" + label_ + "' expects " + std::to_string(param_dim_) +
                      " parameter(s), got " + std::to_string(theta.dim()));
  }
  if (!domain_.contains(theta)) {
    throw DomainError("parameter point outside the domain of model '" + label_ + "'");
  }
  return state_fn_(theta);
}

EstimandFunction abs_estimand() {
  return {[](const ParamPoint& p) { return std::abs(p.scalar()); }, "abs"};
}

EstimandFunction coordinate_estimand(std::size_t i) {
  return {[i](const ParamPoint& p) { return p[i]; }, "coordinate:" + std::to_string(i)};
}

DifferenceSpec DifferenceSpec::scalar(double delta, double t, int order) {
  DifferenceSpec s;
  s.delta = {delta};
  s.t = {t};
  s.order = order;
  return s;
}

DifferenceSpec DifferenceSpec::vector(std::vector<double> delta, std::vector<double> t) {
  DifferenceSpec s;
  s.delta = std::move(delta);
  s.t = std::move(t);
  return s;
}

void DifferenceSpec::validate(std::size_t param_dim) const {
  if (delta.size() != param_dim || t.size() != param_dim) {
    throw DomainError("difference spec dimension does not match the model");
  }
  for (double d : delta) {
    if (d == 0.0 || !std::isfinite(d)) throw DomainError("difference step must be nonzero");
  }
  for (double w : t) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("difference weight t must lie in [0, 1]");
  }
  if (order < 1) throw DomainError("difference order must be >= 1");
}

namespace {

std::string format_scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

// Wraps a matrix that is Hermitian up to roundoff into a HermMatrix by exact
// symmetrization, and checks tracelessness. `amplification` is the sum of the
// absolute coefficients applied to the (unit-trace) states, which sets how
// much roundoff the combination can legitimately carry.
HermMatrix as_traceless_herm(const cmatrix& m, const std::string& what, double amplification) {
  const double trace = std::abs(m.trace());
  const double threshold = tol::traceless * std::max(1.0, amplification);
  if (trace > threshold) {
    throw InvalidInputError(what + " has trace " + format_scientific(trace) +
                            " but must be traceless (threshold " +
                            format_scientific(threshold) + ")");
  }
  return HermMatrix(((m + m.adjoint()) / 2.0).eval());
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / i;
  return out;
}

}  // namespace

HermMatrix state_difference(const ParametricModel& model, const ParamPoint& theta,
                            const DifferenceSpec& spec, std::size_t coord) {
  spec.validate(model.param_dim());
  if (coord >= model.param_dim()) throw DomainError("difference coordinate out of range");
  const double delta = spec.delta[coord];
  const double t = spec.t[coord];
  const DensityMatrix fwd = model.state(theta.shifted(coord, t * delta));
  const DensityMatrix bwd = model.state(theta.shifted(coord, -(1.0 - t) * delta));
  return as_traceless_herm((fwd.mat() - bwd.mat()) / delta, "state difference",
                           2.0 / std::abs(delta));
}

HermMatrix kth_difference(const ParametricModel& model, const ParamPoint& theta, double delta,
                          int k) {
  if (model.param_dim() != 1) throw DomainError("order-k differences require a scalar model");
  if (k < 1) throw DomainError("difference order must be >= 1");
  if (delta == 0.0 || !std::isfinite(delta)) throw DomainError("difference step must be nonzero");
  cmatrix acc = cmatrix::Zero(model.dim(), model.dim());
  for (int i = 0; i <= k; ++i) {
    const double coeff = (i % 2 == 0 ? 1.0 : -1.0) * binomial(k, i);
    acc += coeff * model.state(theta.shifted(0, i * delta)).mat();
  }
  const double sign = (k % 2 == 0 ? 1.0 : -1.0);
  acc *= sign / std::pow(delta, k);
  return as_traceless_herm(acc, "order-" + std::to_string(k) + " difference",
                           std::pow(2.0 / std::abs(delta), k));
}

HermMatrix state_derivative(const ParametricModel& model, const ParamPoint& theta,
                            std::size_t coord, const DerivativeSpec& spec) {
  if (coord >= model.param_dim()) throw DomainError("derivative coordinate out of range");
  if (spec.step <= 0.0) throw DomainError("derivative step must be positive");
  const auto central = [&](double h) {
    const DensityMatrix fwd = model.state(theta.shifted(coord, h));
    const DensityMatrix bwd = model.state(theta.shifted(coord, -h));
    return cmatrix(((fwd.mat() - bwd.mat()) / (2.0 * h)).eval());
  };
  cmatrix d = central(spec.step);
  if (spec.richardson) {
    d = (4.0 * central(spec.step / 2.0) - d) / 3.0;
  }
  const double amplification = (spec.richardson ? 3.0 : 1.0) / spec.step;
  return as_traceless_herm(d, "state derivative", amplification);
}

double scalar_difference(const EstimandFunction& g, const ParamPoint& theta,
                         const DifferenceSpec& spec, std::size_t coord) {
  const double delta = spec.delta.at(coord);
  const double t = spec.t.at(coord);
  return (g(theta.shifted(coord, t * delta)) - g(theta.shifted(coord, -(1.0 - t) * delta))) /
         delta;
}

double kth_scalar_difference(const EstimandFunction& g, const ParamPoint& theta, double delta,
                             int k) {
  double acc = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double coeff = (i % 2 == 0 ? 1.0 : -1.0) * binomial(k, i);
    acc += coeff * g(theta.shifted(0, i * delta));
  }
  const double sign = (k % 2 == 0 ? 1.0 : -1.0);
  return acc * sign / std::pow(delta, k);
}

double scalar_derivative(const EstimandFunction& g, const ParamPoint& theta, std::size_t coord,
                         const DerivativeSpec& spec) {
  const auto central = [&](double h) {
    return (g(theta.shifted(coord, h)) - g(theta.shifted(coord, -h))) / (2.0 * h);
  };
  double d = central(spec.step);
  if (spec.richardson) d = (4.0 * central(spec.step / 2.0) - d) / 3.0;
  return d;
}

ParametricModel concurrence_model() {
  Domain domain = Domain::box({Interval{-1.0, 1.0, true, true}});
  auto state = [](const ParamPoint& p) {
    const double theta = p.scalar();
    cmatrix m = cmatrix::Zero(2, 2);
    m(0, 0) = (1.0 + theta) / 2.0;
    m(1, 1) = (1.0 - theta) / 2.0;
    return DensityMatrix::from_matrix(m);
  };
  return ParametricModel(1, std::move(domain), 2, "concurrence", state);
}

namespace {

// Number of 2x2 blocks the support of the discrete state occupies.
index_t discrete_block_count(long theta) { return (theta + 1) / 2; }

}  // namespace

DensityMatrix discrete_model(long theta, index_t dim_cut) {
  if (theta < 1) throw DomainError("discrete model requires theta >= 1");
  const index_t blocks = discrete_block_count(theta);
  if (dim_cut < 2 * blocks + 2) {
    throw DomainError("dim_cut " + std::to_string(dim_cut) +
                      " too small for discrete model at theta " + std::to_string(theta));
  }
  cmatrix m = cmatrix::Zero(dim_cut, dim_cut);
  const double scale = 1.0 / static_cast<double>(theta);
  const bool odd = (theta % 2 != 0);
  const index_t full_blocks = odd ? blocks - 1 : blocks;
  for (index_t b = 0; b < full_blocks; ++b) {
    const index_t off = 2 * b;
    m(off, off) = scale;
    m(off, off + 1) = scale / 2.0;
    m(off + 1, off) = scale / 2.0;
    m(off + 1, off + 1) = scale;
  }
  if (odd) {
    const index_t off = 2 * (blocks - 1);
    m(off, off) = scale;  // rank-one corner block
  }
  return DensityMatrix::from_matrix(m);
}

ParametricModel discrete_model_family(index_t dim_cut) {
  if (dim_cut < 4) throw DomainError("discrete model family requires dim_cut >= 4");
  // Largest theta whose support plus one empty block fits in dim_cut.
  long hi = dim_cut - 2;
  while (hi >= 1 && 2 * discrete_block_count(hi) + 2 > dim_cut) --hi;
  Domain domain = Domain::integer_points(1, hi);
  auto state = [dim_cut](const ParamPoint& p) {
    return discrete_model(static_cast<long>(std::llround(p.scalar())), dim_cut);
  };
  return ParametricModel(1, std::move(domain), dim_cut, "discrete", state);
}

}  // namespace qbound
