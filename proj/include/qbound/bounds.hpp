#pragma once

// Lower bounds on estimator mean squared error: quantum Cramér-Rao and its
// difference-quotient generalizations (scalar, higher-order and
// multiparameter), asymptotic exponents for isolated-point models, relative
// entropy, and the closed-form bounds of the displaced-thermal family.

#include "qbound/gaussian.hpp"
#include "qbound/models.hpp"

#include <optional>

namespace qbound {

enum class Flavor { sld, rld };

// Scalar information value J of one flavor under one evaluation spec.
struct InfoScalar {
  double value = 0.0;
  Flavor flavor = Flavor::sld;
  EvalSpec spec;
};

// Information matrix for vector parameters. The symmetric flavor is real
// PSD; the right flavor is Hermitian PSD with the convention
// J_ij = Tr[rho L_i L_j^dagger].
struct InfoMatrix {
  cmatrix entries;
  Flavor flavor = Flavor::sld;
};

// Gram matrix of difference logarithmic derivatives of orders 1..r together
// with the matching vector of estimand differences.
struct KoikeMatrix {
  int r = 1;
  cmatrix entries;
  rvector v;
  Flavor flavor = Flavor::sld;
};

enum class BoundKind { qcr, qhcrk, qk, multi, asympt_discrete, asympt_cont };

struct BoundDiagnostics {
  index_t matrix_dim = 0;   // size of the inverted information/Gram matrix
  index_t pinv_rank = 0;    // rank retained by the pseudo-inverse
  double condition = 0.0;   // conditioning of the retained part
};

// A computed lower bound. `infinite` marks a diverging bound (zero
// information with a nonzero numerator); `value` is meaningless in that case.
struct BoundReport {
  double value = 0.0;
  bool infinite = false;
  BoundKind kind = BoundKind::qhcrk;
  Flavor flavor = Flavor::sld;
  EvalSpec spec;
  std::optional<rmatrix> weight;  // G for multiparameter bounds
  BoundDiagnostics diagnostics;
};

// Rate configuration for the asymptotic bounds.
struct AsymptoticSpec {
  enum class Rate { sqrt_n, exponential };
  Rate rate = Rate::sqrt_n;
  double h = 0.0;  // step scale delta = h / c_n in the continuous case
  long n = 1;      // copy count for the tensor-power formula
};

// Scalar information value: Tr rho L^2 (symmetric flavor) or
// Tr rho L L^dagger (right flavor), with L obtained from the difference or
// derivative spec on a scalar model.
InfoScalar info_scalar(const ParametricModel& model, const ParamPoint& theta,
                       const EvalSpec& spec, Flavor flavor);

// Information matrix for an m-parameter model; per-coordinate differences or
// derivatives according to the spec.
InfoMatrix info_matrix(const ParametricModel& model, const ParamPoint& theta,
                       const EvalSpec& spec, Flavor flavor);

// The right-flavor information through the inverse-weighted overlap trace:
//   (Tr rho_theta^{-1} rho_{theta+delta}^2 - 1) / delta^2,
// algebraically identical to info_scalar with a one-sided step.
InfoScalar rld_info_via_trace(const ParametricModel& model, const ParamPoint& theta,
                              double delta);

// Scalar difference-quotient bound: (difference of g)^2 / J.
BoundReport qhcrk_bound(const ParametricModel& model, const ParamPoint& theta,
                        const EstimandFunction& g, const EvalSpec& spec, Flavor flavor);

// Higher-order bound from differences of orders 1..r: v^T K^+ v.
BoundReport qk_bound(const ParametricModel& model, const ParamPoint& theta,
                     const EstimandFunction& g, double delta, int r, Flavor flavor);

// Exposes the Gram matrix behind qk_bound.
KoikeMatrix koike_matrix(const ParametricModel& model, const ParamPoint& theta,
                         const EstimandFunction& g, double delta, int r, Flavor flavor);

// Weighted-trace multiparameter bound with weight G (real symmetric PSD):
//   symmetric flavor: Sp[G J^{-1}]
//   right flavor:     Sp[G J^{-1}] + Spabs[Im(G J^{-1})].
BoundReport multiparam_bound(const ParametricModel& model, const ParamPoint& theta,
                             const rmatrix& weight, const EvalSpec& spec, Flavor flavor);

// Right-flavor information of the n-fold tensor power of a model with
// one-step scalar information j1: ((1 + delta^2 j1)^n - 1) / delta^2.
// Overflow-guarded: values whose intermediate power exceeds 1e300 are
// reported through the `infinite` flag with the logarithm in `value`.
struct TensorPowerInfo {
  double value = 0.0;
  bool overflow = false;
  double log_value = 0.0;  // natural log of the information when overflowed
};
TensorPowerInfo tensor_power_rld_info(double j1, long n, double delta);

// Error exponent of adjacent-point discrimination on an isolated-point
// domain: log(1 + delta^2 J) with J the one-sided right-flavor information.
// Throws DomainError when theta and theta + delta are not adjacent domain
// points.
BoundReport discrete_asymptotic_exponent(const ParametricModel& model, const ParamPoint& theta,
                                         double delta);

// Umegaki relative entropy D(rho || sigma) = Tr rho (log rho - log sigma).
// Support violations yield the infinite flag.
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Asymptotic continuous-rate bound (g'_t)^2 / J^{R,t} evaluated at the given
// split weight t using derivative information: exposed as a computed value
// only.
BoundReport asymptotic_continuous_bound(const ParametricModel& model, const ParamPoint& theta,
                                        const EstimandFunction& g, double t);

// ---- Closed forms of the displaced-thermal family ----

// Inverse-weighted overlap of two displaced copies over the undisplaced
// state: exp(J(xz + yw) - i A(xw - yz)), modulus exp(J(xz + yw)).
complex_t gaussian_overlap_trace(double x, double y, double z, double w, double sigma2);

// Koike-type bound of the piecewise scalar submodel at theta > 0 with one
// finite step delta1 > 0 landing on the opposite branch and one
// infinitesimal step:
//   1/J + delta1^2 / (exp(J(theta^2 + delta1^2)) - 1 - theta^2 J).
double gaussian_koike_bound(double theta, double delta1, double sigma2);

// The same bound assembled as a 2x2 Gram pseudo-inverse quadratic form with
// the finite-step entry built from gaussian_overlap_trace; cross-validates
// the closed form.
double gaussian_koike_bound_gram(double theta, double delta1, double sigma2);

// Weighted-trace bounds of the piecewise vector submodel on an axis
// (one-sidedly differentiable coordinate with split weight t2).
struct Case2Bounds {
  ExtendedReal rld;
  double sld = 0.0;
};
Case2Bounds gaussian_case2_bounds(double t2, double sigma2);

// Finite-step right-flavor bound of the piecewise vector submodel at
// theta1, theta2 < 0 with steps landing at t, s > 0:
//   (a + d + 2|c|) / (ad - b^2 - c^2).
struct Gaussian2dBound {
  double value = 0.0;
  bool admissible = true;  // false when the denominator is nonpositive
};
Gaussian2dBound gaussian_2d_finite_delta_bound(double theta1, double theta2, double t, double s,
                                               double sigma2);

}  // namespace qbound
