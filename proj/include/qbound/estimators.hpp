#pragma once

// Estimators: observables and their projection-valued measures, general
// positive operator-valued measures, exact Born-rule bias/MSE evaluation, and
// deterministic Monte-Carlo simulation of sampling estimators.

#include "qbound/models.hpp"

#include <cstdint>
#include <vector>

namespace qbound {

// Counter-style 64-bit generator (splitmix64). Cheap to seed, no warm-up,
// and statistically solid for Monte-Carlo use; per-trial substreams make the
// results independent of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed of the independent substream `stream` under the master seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

struct PovmOutcome {
  double value = 0.0;   // gamma: the number the estimator reports
  HermMatrix element;   // PSD effect operator
};

// A positive operator-valued measure with finitely many outcomes.
class Povm {
 public:
  // Validates positivity of every element (eigenvalues >= -1e-10) and
  // completeness: the elements must sum to the identity within 1e-9.
  explicit Povm(std::vector<PovmOutcome> outcomes);

  const std::vector<PovmOutcome>& outcomes() const noexcept { return outcomes_; }
  index_t dim() const noexcept { return outcomes_.empty() ? 0 : outcomes_[0].element.dim(); }

 private:
  std::vector<PovmOutcome> outcomes_;
};

// A Hermitian observable; grouping_tol is the relative eigenvalue-merging
// tolerance used when forming its projection-valued measure.
struct Observable {
  HermMatrix op;
  double grouping_tol = tol::grouping;
};

// Spectral decomposition of an observable as a PVM: eigenvalues closer than
// grouping_tol * ||T|| are merged into a single outcome whose value is the
// group mean and whose element is the summed projector.
Povm observable_to_pvm(const Observable& t);

enum class EvalMode { exact, monte_carlo };

struct EstimatorReport {
  double bias = 0.0;
  double mse = 0.0;
  EvalMode mode = EvalMode::exact;
  long n_copies = 1;
  long trials = 0;            // Monte-Carlo only
  std::uint64_t seed = 0;     // Monte-Carlo only
  double std_error = 0.0;     // Monte-Carlo standard error of the MSE estimate
};

// Exact bias and MSE of a POVM estimator at theta:
//   bias = sum_k (gamma_k - g(theta)) Tr(rho M_k),
//   mse  = sum_k (gamma_k - g(theta))^2 Tr(rho M_k).
// Throws InconsistentPovmError when the outcome probabilities do not sum to 1
// within 1e-8 on this state.
EstimatorReport exact_bias_mse(const ParametricModel& model, const ParamPoint& theta,
                               const EstimandFunction& g, const Povm& m);

// Block tridiagonal observable that estimates the discrete model's parameter
// without bias: 2x2 blocks [[2i-1, 1/2], [1/2, 2i+1/2]] for odd i.
// dim_cut must be even and >= 4.
Observable discrete_optimal_observable(index_t dim_cut);

// Variant for odd theta with the block at i = theta replaced by
// diag(2 theta - 1, 2 theta + 1), decoupling the rank-one corner.
Observable discrete_decoupled_observable(long theta, index_t dim_cut);

// Two-step folded-mean estimator of |theta| on the Bell-diagonal family:
// n per-copy outcomes x_i = +/-1 with P(+1) = (1+theta)/2, sample mean ybar,
// folded estimate y = -ybar if ybar < -n^(-1/3), else ybar.
EstimatorReport simulate_concurrence_estimator(double theta, long n, long trials,
                                               std::uint64_t seed);

// Generic Born-rule sampler: per trial, n_copies independent single-copy
// measurements of M on rho_theta, estimate = sample mean of outcome values.
EstimatorReport simulate_povm_sampling(const ParametricModel& model, const ParamPoint& theta,
                                       const EstimandFunction& g, const Povm& m, long n_copies,
                                       long trials, std::uint64_t seed);

}  // namespace qbound
