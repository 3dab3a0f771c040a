#include "qbound/bounds.hpp"

#include <cmath>
#include <vector>

namespace qbound {

namespace {

// Logarithmic derivative of the chosen flavor for one coordinate of the spec.
GeneralOperator log_derivative(const ParametricModel& model, const ParamPoint& theta,
                               const DensityMatrix& rho, const EvalSpec& spec, std::size_t coord,
                               Flavor flavor) {
  HermMatrix d = std::holds_alternative<DifferenceSpec>(spec)
                     ? state_difference(model, theta, std::get<DifferenceSpec>(spec), coord)
                     : state_derivative(model, theta, coord, std::get<DerivativeSpec>(spec));
  if (flavor == Flavor::sld) return solve_sld(rho, d).mat();
  return solve_rld(rho, d);
}

double quadratic_info(const DensityMatrix& rho, const GeneralOperator& l, Flavor flavor) {
  if (flavor == Flavor::sld) return (rho.mat() * l * l).trace().real();
  return (rho.mat() * l * l.adjoint()).trace().real();
}

// Gram entry of two logarithmic derivatives under rho:
// symmetric flavor uses the symmetrized product, right flavor the conjugated
// second factor.
complex_t gram_entry(const DensityMatrix& rho, const GeneralOperator& li,
                     const GeneralOperator& lj, Flavor flavor) {
  if (flavor == Flavor::sld) {
    return 0.5 * (rho.mat() * (li * lj + lj * li)).trace();
  }
  return (rho.mat() * li * lj.adjoint()).trace();
}

void require_scalar_model(const ParametricModel& model) {
  if (model.param_dim() != 1) {
    throw DomainError("operation requires a scalar-parameter model");
  }
}

double difference_of_g(const EstimandFunction& g, const ParamPoint& theta, const EvalSpec& spec,
                       std::size_t coord) {
  if (std::holds_alternative<DifferenceSpec>(spec)) {
    return scalar_difference(g, theta, std::get<DifferenceSpec>(spec), coord);
  }
  return scalar_derivative(g, theta, coord, std::get<DerivativeSpec>(spec));
}

}  // namespace

InfoScalar info_scalar(const ParametricModel& model, const ParamPoint& theta,
                       const EvalSpec& spec, Flavor flavor) {
  require_scalar_model(model);
  const DensityMatrix rho = model.state(theta);
  const GeneralOperator l = log_derivative(model, theta, rho, spec, 0, flavor);
  return {quadratic_info(rho, l, flavor), flavor, spec};
}

InfoMatrix info_matrix(const ParametricModel& model, const ParamPoint& theta,
                       const EvalSpec& spec, Flavor flavor) {
  const std::size_t m = model.param_dim();
  const DensityMatrix rho = model.state(theta);
  std::vector<GeneralOperator> ls;
  ls.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    ls.push_back(log_derivative(model, theta, rho, spec, i, flavor));
  }
  cmatrix j(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      const complex_t entry = gram_entry(rho, ls[i], ls[k], flavor);
      j(i, k) = entry;
      j(k, i) = std::conj(entry);
    }
  }
  if (flavor == Flavor::sld) j = j.real().cast<complex_t>();  // symmetric flavor is real
  return {std::move(j), flavor};
}

InfoScalar rld_info_via_trace(const ParametricModel& model, const ParamPoint& theta,
                              double delta) {
  require_scalar_model(model);
  if (delta == 0.0 || !std::isfinite(delta)) throw DomainError("step must be nonzero");
  const DensityMatrix rho = model.state(theta);
  const DensityMatrix sigma = model.state(theta.shifted(0, delta));

  // Rotate sigma into rho's eigenbasis and require its support to sit inside
  // rho's support.
  const cmatrix sigma_eig = rho.eigenvectors().adjoint() * sigma.mat() * rho.eigenvectors();
  const index_t dim = rho.dim();
  const index_t supp = rho.support_dim();
  const index_t off = dim - supp;  // support occupies the trailing eigenvalues
  double outside_sq = 0.0;
  for (index_t i = 0; i < dim; ++i) {
    for (index_t j = 0; j < dim; ++j) {
      if (i >= off && j >= off) continue;
      outside_sq += std::norm(sigma_eig(i, j));
    }
  }
  if (std::sqrt(outside_sq) > tol::residual_rel) {
    throw SingularSupportError("shifted state has weight outside the base state's support");
  }

  double overlap = 0.0;  // Tr rho^{-1} sigma^2 restricted to the support
  for (index_t i = off; i < dim; ++i) {
    double row_sq = 0.0;
    for (index_t j = off; j < dim; ++j) row_sq += std::norm(sigma_eig(i, j));
    overlap += row_sq / rho.eigenvalues()(i);
  }
  const double value = (overlap - 1.0) / (delta * delta);
  return {value, Flavor::rld, DifferenceSpec::scalar(delta, 1.0)};
}

BoundReport qhcrk_bound(const ParametricModel& model, const ParamPoint& theta,
                        const EstimandFunction& g, const EvalSpec& spec, Flavor flavor) {
  const InfoScalar info = info_scalar(model, theta, spec, flavor);
  const double dg = difference_of_g(g, theta, spec, 0);
  const double numerator = dg * dg;

  BoundReport report;
  report.kind = std::holds_alternative<DerivativeSpec>(spec) ? BoundKind::qcr : BoundKind::qhcrk;
  report.flavor = flavor;
  report.spec = spec;
  report.diagnostics.matrix_dim = 1;
  report.diagnostics.pinv_rank = info.value > 0.0 ? 1 : 0;
  if (info.value <= 0.0) {
    if (numerator > 0.0) {
      report.infinite = true;
    } else {
      report.value = 0.0;
    }
    return report;
  }
  report.value = numerator / info.value;
  return report;
}

KoikeMatrix koike_matrix(const ParametricModel& model, const ParamPoint& theta,
                         const EstimandFunction& g, double delta, int r, Flavor flavor) {
  require_scalar_model(model);
  if (r < 1) throw DomainError("difference order must be >= 1");
  const DensityMatrix rho = model.state(theta);
  std::vector<GeneralOperator> ls;
  ls.reserve(r);
  for (int k = 1; k <= r; ++k) {
    const HermMatrix d = kth_difference(model, theta, delta, k);
    ls.push_back(flavor == Flavor::sld ? cmatrix(solve_sld(rho, d).mat()) : solve_rld(rho, d));
  }
  KoikeMatrix km;
  km.r = r;
  km.flavor = flavor;
  km.entries.resize(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j <= i; ++j) {
      const complex_t entry = gram_entry(rho, ls[i], ls[j], flavor);
      km.entries(i, j) = entry;
      km.entries(j, i) = std::conj(entry);
    }
  }
  km.v.resize(r);
  for (int k = 1; k <= r; ++k) km.v(k - 1) = kth_scalar_difference(g, theta, delta, k);
  return km;
}

BoundReport qk_bound(const ParametricModel& model, const ParamPoint& theta,
                     const EstimandFunction& g, double delta, int r, Flavor flavor) {
  const KoikeMatrix km = koike_matrix(model, theta, g, delta, r, flavor);
  const PinvResult inv = pinv_full(km.entries);
  const cvector v = km.v.cast<complex_t>();
  const double value = (v.adjoint() * inv.inverse * v)(0, 0).real();

  BoundReport report;
  report.kind = BoundKind::qk;
  report.flavor = flavor;
  report.spec = DifferenceSpec::scalar(delta, 1.0, r);
  report.value = value;
  report.diagnostics.matrix_dim = r;
  report.diagnostics.pinv_rank = inv.rank;
  report.diagnostics.condition = inv.condition;
  return report;
}

BoundReport multiparam_bound(const ParametricModel& model, const ParamPoint& theta,
                             const rmatrix& weight, const EvalSpec& spec, Flavor flavor) {
  const auto m = static_cast<index_t>(model.param_dim());
  if (weight.rows() != m || weight.cols() != m) {
    throw DomainError("weight matrix dimension does not match the parameter count");
  }
  if ((weight - weight.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw DomainError("weight matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<rmatrix> wsolver(weight);
  if (wsolver.eigenvalues().minCoeff() < -1e-9 * std::max(1.0, weight.norm())) {
    throw DomainError("weight matrix must be positive semidefinite");
  }

  const InfoMatrix info = info_matrix(model, theta, spec, flavor);
  const PinvResult inv = pinv_full(info.entries);
  const cmatrix weighted = weight.cast<complex_t>() * inv.inverse;

  BoundReport report;
  report.kind = BoundKind::multi;
  report.flavor = flavor;
  report.spec = spec;
  report.weight = weight;
  report.value = weighted.trace().real();
  if (flavor == Flavor::rld) {
    report.value += spabs(weighted.imag().cast<complex_t>());
  }
  report.diagnostics.matrix_dim = m;
  report.diagnostics.pinv_rank = inv.rank;
  report.diagnostics.condition = inv.condition;
  return report;
}

TensorPowerInfo tensor_power_rld_info(double j1, long n, double delta) {
  if (n < 1) throw DomainError("copy count must be >= 1");
  if (delta == 0.0 || !std::isfinite(delta)) throw DomainError("step must be nonzero");
  if (j1 < 0.0) throw DomainError("scalar information must be nonnegative");
  TensorPowerInfo out;
  if (n == 1) {
    out.value = j1;
    return out;
  }
  const double log_power = static_cast<double>(n) * std::log1p(delta * delta * j1);
  if (log_power > std::log(1e300)) {
    out.overflow = true;
    // log of ((1+x)^n - 1)/delta^2; the subtracted 1 is negligible here.
    out.log_value = log_power - 2.0 * std::log(std::abs(delta));
    return out;
  }
  out.value = std::expm1(log_power) / (delta * delta);
  return out;
}

BoundReport discrete_asymptotic_exponent(const ParametricModel& model, const ParamPoint& theta,
                                         double delta) {
  require_scalar_model(model);
  if (!model.domain().is_discrete()) {
    throw DomainError("asymptotic exponent requires an isolated-point domain");
  }
  const double here = theta.scalar();
  if (!model.domain().adjacent(here, here + delta)) {
    throw DomainError("points are not adjacent in the domain");
  }
  const InfoScalar j = rld_info_via_trace(model, theta, delta);
  BoundReport report;
  report.value = std::log1p(delta * delta * j.value);
  report.infinite = false;
  report.kind = BoundKind::asympt_discrete;
  report.flavor = Flavor::rld;
  report.spec = j.spec;
  report.diagnostics.matrix_dim = static_cast<int>(model.dim());
  return report;
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidInputError("states must share one dimension");
  const index_t dim = rho.dim();

  // Weight of rho outside sigma's support decides finiteness.
  double entropy = 0.0;  // Tr rho log rho
  for (index_t i = 0; i < dim; ++i) {
    const double lam = rho.eigenvalues()(i);
    if (lam > rho.support_tol()) entropy += lam * std::log(lam);
  }

  double cross = 0.0;  // Tr rho log sigma
  double outside = 0.0;
  for (index_t j = 0; j < dim; ++j) {
    const double mu = sigma.eigenvalues()(j);
    const double weight =
        (sigma.eigenvectors().col(j).adjoint() * rho.mat() * sigma.eigenvectors().col(j))(0, 0)
            .real();
    if (mu > sigma.support_tol()) {
      cross += weight * std::log(mu);
    } else {
      outside += std::max(weight, 0.0);
    }
  }
  if (outside > tol::residual_rel) return ExtendedReal::infinity();
  return ExtendedReal::finite(std::max(entropy - cross, 0.0));
}

BoundReport asymptotic_continuous_bound(const ParametricModel& model, const ParamPoint& theta,
                                        const EstimandFunction& g, double t) {
  // One-sided limits evaluated at a small fixed step.
  const DifferenceSpec spec = DifferenceSpec::scalar(1e-6, t);
  BoundReport report = qhcrk_bound(model, theta, g, spec, Flavor::rld);
  report.kind = BoundKind::asympt_cont;
  return report;
}

complex_t gaussian_overlap_trace(double x, double y, double z, double w, double sigma2) {
  const GaussianInfoConstants c(sigma2);  // rejects sigma2 <= 1/2
  return std::exp(complex_t(c.J * (x * z + y * w), -c.A * (x * w - y * z)));
}

double gaussian_koike_bound(double theta, double delta1, double sigma2) {
  if (delta1 == 0.0) throw DomainError("finite step delta1 must be nonzero");
  const GaussianInfoConstants c(sigma2);
  const double denom =
      std::expm1(c.J * (theta * theta + delta1 * delta1)) - theta * theta * c.J;
  if (denom <= 0.0) throw DomainError("inadmissible delta1: nonpositive denominator");
  return 1.0 / c.J + delta1 * delta1 / denom;
}

double gaussian_koike_bound_gram(double theta, double delta1, double sigma2) {
  if (theta + delta1 == 0.0) throw DomainError("theta + delta1 must be nonzero");
  const GaussianInfoConstants c(sigma2);
  // Finite-step Gram entry from the overlap closed form (two independent
  // modes contribute multiplicatively), infinitesimal-step entries from the
  // information constants.
  const complex_t finite_leg = gaussian_overlap_trace(-theta, 0.0, -theta, 0.0, sigma2) *
                               gaussian_overlap_trace(-delta1, 0.0, -delta1, 0.0, sigma2);
  const double step = theta + delta1;
  cmatrix k(2, 2);
  k(0, 0) = (finite_leg.real() - 1.0) / (step * step);
  k(0, 1) = k(1, 0) = c.J * theta / step;
  k(1, 1) = c.J;
  const cmatrix kinv = pinv(k);
  const cvector ones = cvector::Ones(2);
  return (ones.adjoint() * kinv * ones)(0, 0).real();
}

Case2Bounds gaussian_case2_bounds(double t2, double sigma2) {
  if (!(t2 >= 0.0 && t2 <= 1.0)) throw DomainError("split weight t2 must lie in [0, 1]");
  if (sigma2 < 0.5) throw DomainError("quadrature variance must be >= 1/2");
  Case2Bounds out;
  const double quad = 2.0 * t2 * t2 - 2.0 * t2 + 1.0;
  out.sld = sigma2 / quad + sigma2;

  if (t2 == 0.0) {
    // Removable singularity: the ratio simplifies to 2 sigma^2 + 1 exactly.
    out.rld = ExtendedReal::finite(2.0 * sigma2 + 1.0);
    return out;
  }
  const double det = sigma2 * sigma2 - 0.25;
  if (det == 0.0) {
    // Coherent-state case: the numerator vanishes identically for t2 != 0.
    out.rld = ExtendedReal::finite(0.0);
    return out;
  }
  const double numerator = det * (2.0 * sigma2 * (t2 * t2 - t2 + 1.0) + 1.0 - t2);
  const double denominator = sigma2 * sigma2 * quad - (1.0 - t2) * (1.0 - t2) / 4.0;
  if (denominator == 0.0) {
    out.rld = ExtendedReal::infinity();
    return out;
  }
  out.rld = ExtendedReal::finite(numerator / denominator);
  return out;
}

Gaussian2dBound gaussian_2d_finite_delta_bound(double theta1, double theta2, double t, double s,
                                               double sigma2) {
  if (!(theta1 < 0.0 && theta2 < 0.0 && t > 0.0 && s > 0.0)) {
    throw DomainError("requires theta1 < 0, theta2 < 0 and landing points t, s > 0");
  }
  const GaussianInfoConstants c(sigma2);
  const double a = std::expm1(c.J * (theta1 * theta1 + t * t)) / ((t - theta1) * (t - theta1));
  const double d = std::expm1(c.J * (theta2 * theta2 + s * s)) / ((s - theta2) * (s - theta2));
  const complex_t bc = std::exp(complex_t(0.0, -c.A * (t * s + theta1 * theta2))) - 1.0;
  const double b = bc.real();
  const double cc = bc.imag();

  Gaussian2dBound out;
  const double denominator = a * d - b * b - cc * cc;
  if (denominator <= 0.0) {
    out.admissible = false;
    return out;
  }
  out.value = (a + d + 2.0 * std::abs(cc)) / denominator;
  return out;
}

}  // namespace qbound
