#pragma once

// Truncated-Fock-space Gaussian states: displaced thermal states with
// variance sigma^2 per quadrature, their closed-form information constants,
// the two-parameter mean-displacement model and the piecewise two-mode
// submodels with a non-differentiable point at the origin.

#include "qbound/models.hpp"

#include <array>

namespace qbound {

// A displaced thermal state on the span of the first N+1 number states.
// sigma2 is the per-quadrature variance (1/2 = coherent state); mean holds
// the two quadrature expectation values.
struct GaussianParams {
  double sigma2 = 1.0;
  std::array<double, 2> mean{0.0, 0.0};
  int truncation = 60;      // N: kept number states are |0> ... |N>
  double trace_tol = 1e-6;  // largest tolerated discarded tail weight
};

// Closed-form constants of the displaced-thermal family: the diagonal (J) and
// off-diagonal magnitude (A) of its right-logarithmic-derivative information
// matrix. Defined for sigma2 > 1/2.
struct GaussianInfoConstants {
  double J = 0.0;
  double A = 0.0;

  explicit GaussianInfoConstants(double sigma2);
};

struct TruncatedGaussian {
  DensityMatrix state;
  double tail_weight = 0.0;  // weight discarded by the truncation, before renormalizing
};

// Builds the truncated displaced thermal state from its closed-form Fock
// matrix elements (every entry carries full relative accuracy), renormalized
// to unit trace. Throws TruncationError when the discarded tail exceeds
// params.trace_tol.
TruncatedGaussian gaussian_fock_state(const GaussianParams& params);

// Truncated ladder and quadrature operators on dimension n_max + 1.
cmatrix annihilation_op(int n_max);
cmatrix quadrature_p(int n_max);  // (a + a^dagger)/sqrt(2)
cmatrix quadrature_q(int n_max);  // (a - a^dagger)/(i sqrt(2))

// Two-parameter model theta -> displaced thermal state with mean theta.
ParametricModel gaussian_mean_model(double sigma2, int truncation);

enum class SubmodelKind { scalar, vector };

// Piecewise two-mode models that are one-sidedly differentiable but not
// differentiable at theta = 0:
//   scalar: rho_(0,0) (x) rho_(theta,0) for theta <= 0,
//           rho_(theta,0) (x) rho_(0,0) for theta >= 0;
//   vector: one quadrant-dependent assignment of the two displacements to the
//           two modes, continuous across the axes.
ParametricModel gaussian_singular_submodel(SubmodelKind kind, double sigma2, int truncation);

}  // namespace qbound
