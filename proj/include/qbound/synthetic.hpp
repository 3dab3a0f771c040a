#pragma once

// Deterministic pseudo-random matrices and model families used by property
// checks and self-tests: random full-rank states, traceless directions,
// affine segment models, kinked piecewise-affine models and smooth
// unitary-rotated families.

#include "qbound/estimators.hpp"
#include "qbound/models.hpp"

namespace qbound {

// Standard-normal generator on top of the SplitMix64 stream.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}
  double next();
  SplitMix64& rng() { return rng_; }

 private:
  SplitMix64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Random Hermitian matrix with independent normal entries.
HermMatrix random_hermitian(index_t dim, GaussianSampler& g);

// Random full-rank state: normalized Wishart-like matrix mixed with the
// maximally mixed state (weight `floor`) to keep eigenvalues away from zero.
DensityMatrix random_full_rank_state(index_t dim, GaussianSampler& g, double floor = 0.2);

// Traceless Hermitian direction scaled so that base + u * direction stays
// positive semidefinite for all u in [-1, 1].
HermMatrix random_feasible_direction(const DensityMatrix& base, GaussianSampler& g);

// Affine segment rho(u) = (1 - u) a + u b on the closed box [lo, hi].
ParametricModel segment_model(const DensityMatrix& a, const DensityMatrix& b, double lo = 0.0,
                              double hi = 1.0);

// Affine ray rho(u) = base + u * direction on [-1, 1].
ParametricModel affine_model(const DensityMatrix& base, const HermMatrix& direction);

// Piecewise-affine model with a kink at u = 0: slope `minus` for u < 0 and
// `plus` for u >= 0, both feasible on [-1, 1].
ParametricModel kinked_model(const DensityMatrix& base, const HermMatrix& plus,
                             const HermMatrix& minus);

// Smooth family exp(i u H) (base + u * direction) exp(-i u H) on [-1, 1].
ParametricModel rotated_affine_model(const DensityMatrix& base, const HermMatrix& direction,
                                     const HermMatrix& generator);

}  // namespace qbound
