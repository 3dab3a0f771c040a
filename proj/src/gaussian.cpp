#include "qbound/gaussian.hpp"

#include <cmath>

namespace qbound {

GaussianInfoConstants::GaussianInfoConstants(double sigma2) {
  const double det = sigma2 * sigma2 - 0.25;
  if (!(det > 0.0)) {
    throw DomainError("information constants require sigma2 > 1/2");
  }
  J = sigma2 / det;
  A = 0.5 / det;
}

namespace {

// Fock matrix element (m, n) of the displaced thermal state, as a sum of
// same-phase positive-magnitude terms evaluated in log space:
//   rho_mn = prefactor * sum_k sqrt(m! n!) / (k! (m-k)! (n-k)!) c^k
//            * mu^(m-k) * conj(mu)^(n-k),
// with c the thermal Boltzmann ratio and mu the scaled displacement. Every
// term shares the phase of mu^(m-n), so the sum never cancels and each entry
// is accurate in a relative sense - which downstream inverse-weighted traces
// rely on.
complex_t displaced_thermal_entry(int m, int n, double c, complex_t mu, double log_prefactor) {
  const double abs_mu = std::abs(mu);
  const double log_abs_mu = abs_mu > 0.0 ? std::log(abs_mu) : 0.0;
  const double log_c = c > 0.0 ? std::log(c) : 0.0;
  const int kmax = std::min(m, n);

  double magnitude = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const int pm = m - k;
    const int pn = n - k;
    if ((pm > 0 || pn > 0) && abs_mu == 0.0) continue;  // mu^0 = 1 even when mu = 0
    if (k > 0 && c == 0.0) break;                       // purely coherent state: only k = 0
    double log_term = 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0)) -
                      std::lgamma(k + 1.0) - std::lgamma(pm + 1.0) - std::lgamma(pn + 1.0) +
                      k * log_c + (pm + pn) * log_abs_mu;
    magnitude += std::exp(log_term + log_prefactor);
  }
  if (magnitude == 0.0) return 0.0;
  const complex_t phase = abs_mu > 0.0 ? std::pow(mu / abs_mu, m - n) : complex_t(1.0, 0.0);
  return magnitude * phase;
}

DensityMatrix two_mode_product(const GaussianParams& base, std::array<double, 2> mean_a,
                               std::array<double, 2> mean_b) {
  GaussianParams pa = base;
  pa.mean = mean_a;
  GaussianParams pb = base;
  pb.mean = mean_b;
  const cmatrix prod =
      kron(gaussian_fock_state(pa).state.mat(), gaussian_fock_state(pb).state.mat());
  return DensityMatrix::from_matrix(prod);
}

}  // namespace

TruncatedGaussian gaussian_fock_state(const GaussianParams& params) {
  if (params.truncation < 8) throw DomainError("Fock truncation must be >= 8");
  if (params.sigma2 < 0.5) throw DomainError("quadrature variance must be >= 1/2");

  const double nbar = params.sigma2 - 0.5;           // mean thermal occupation
  const double c = nbar / (nbar + 1.0);              // Boltzmann ratio in [0, 1)
  const complex_t alpha(params.mean[0] / std::sqrt(2.0), params.mean[1] / std::sqrt(2.0));
  const complex_t mu = alpha / (nbar + 1.0);
  const double log_prefactor = std::log(1.0 - c) - std::norm(alpha) / (nbar + 1.0);

  const int dim = params.truncation + 1;
  cmatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      const complex_t entry = displaced_thermal_entry(i, j, c, mu, log_prefactor);
      m(i, j) = entry;
      m(j, i) = std::conj(entry);
    }
  }

  const double kept = m.trace().real();
  const double tail = 1.0 - kept;
  if (tail > params.trace_tol) {
    throw TruncationError("discarded Fock tail weight " + std::to_string(tail) +
                          " exceeds the tolerance; increase the truncation");
  }
  TruncatedGaussian out;
  out.tail_weight = tail;
  out.state = DensityMatrix::from_matrix((m / kept).eval());
  return out;
}

cmatrix annihilation_op(int n_max) {
  cmatrix a = cmatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

cmatrix quadrature_p(int n_max) {
  const cmatrix a = annihilation_op(n_max);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

cmatrix quadrature_q(int n_max) {
  const cmatrix a = annihilation_op(n_max);
  return (a - a.adjoint()) / complex_t(0.0, std::sqrt(2.0));
}

ParametricModel gaussian_mean_model(double sigma2, int truncation) {
  GaussianParams base;
  base.sigma2 = sigma2;
  base.truncation = truncation;
  auto state = [base](const ParamPoint& p) {
    GaussianParams params = base;
    params.mean = {p[0], p[1]};
    return gaussian_fock_state(params).state;
  };
  return ParametricModel(2, Domain::reals(2), truncation + 1, "gaussian2", state);
}

ParametricModel gaussian_singular_submodel(SubmodelKind kind, double sigma2, int truncation) {
  GaussianParams base;
  base.sigma2 = sigma2;
  base.truncation = truncation;
  const index_t dim = static_cast<index_t>(truncation + 1) * (truncation + 1);

  if (kind == SubmodelKind::scalar) {
    auto state = [base](const ParamPoint& p) {
      const double theta = p.scalar();
      if (theta >= 0.0) return two_mode_product(base, {theta, 0.0}, {0.0, 0.0});
      return two_mode_product(base, {0.0, 0.0}, {theta, 0.0});
    };
    return ParametricModel(1, Domain::reals(1), dim, "gaussian-singular-scalar", state);
  }

  auto state = [base](const ParamPoint& p) {
    const double t1 = p[0];
    const double t2 = p[1];
    // Quadrant assignment, continuous across the axes; ties resolved toward
    // the nonnegative branches.
    if (t1 >= 0.0 && t2 >= 0.0) return two_mode_product(base, {t1, t2}, {0.0, 0.0});
    if (t1 >= 0.0 && t2 <= 0.0) return two_mode_product(base, {t1, 0.0}, {0.0, t2});
    if (t1 <= 0.0 && t2 >= 0.0) return two_mode_product(base, {0.0, t2}, {t1, 0.0});
    return two_mode_product(base, {0.0, 0.0}, {t1, t2});
  };
  return ParametricModel(2, Domain::reals(2), dim, "gaussian-singular-vector", state);
}

}  // namespace qbound
