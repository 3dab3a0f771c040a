#include "qbound/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbound {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ ((stream + 1) * 0xd1342543de82ef95ULL));
  return g.next();
}

Povm::Povm(std::vector<PovmOutcome> outcomes) : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw InvalidInputError("POVM needs at least one outcome");
  const index_t dim = outcomes_[0].element.dim();
  cmatrix sum = cmatrix::Zero(dim, dim);
  for (const PovmOutcome& o : outcomes_) {
    if (o.element.dim() != dim) throw InvalidInputError("POVM elements differ in dimension");
    Eigen::SelfAdjointEigenSolver<cmatrix> solver(o.element.mat(),
                                                  Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < tol::povm_psd) {
      throw InvalidInputError("POVM element is not positive semidefinite");
    }
    sum += o.element.mat();
  }
  const double deviation = (sum - cmatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (deviation > tol::povm_completeness) {
    throw InvalidInputError("POVM elements do not sum to the identity (deviation " +
                            std::to_string(deviation) + ")");
  }
}

Povm observable_to_pvm(const Observable& t) {
  const EigResult eig = eig_hermitian(t.op);
  const index_t dim = t.op.dim();
  const double scale = std::max(eig.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  const double gap = t.grouping_tol * scale;

  std::vector<PovmOutcome> outcomes;
  index_t start = 0;
  while (start < dim) {
    index_t stop = start + 1;
    while (stop < dim && eig.eigenvalues(stop) - eig.eigenvalues(stop - 1) <= gap) ++stop;
    const index_t count = stop - start;
    const cmatrix cols = eig.eigenvectors.middleCols(start, count);
    PovmOutcome outcome;
    outcome.value = eig.eigenvalues.segment(start, count).mean();
    outcome.element = HermMatrix(cmatrix(cols * cols.adjoint()));
    outcomes.push_back(std::move(outcome));
    start = stop;
  }
  return Povm(std::move(outcomes));
}

namespace {

// Born-rule outcome probabilities of m on rho, validated to sum to one.
std::vector<double> outcome_probabilities(const DensityMatrix& rho, const Povm& m) {
  if (m.dim() != rho.dim()) throw InvalidInputError("POVM dimension does not match the state");
  std::vector<double> probs;
  probs.reserve(m.outcomes().size());
  double total = 0.0;
  for (const PovmOutcome& o : m.outcomes()) {
    const double p = (rho.mat() * o.element.mat()).trace().real();
    probs.push_back(std::max(p, 0.0));  // clip Born-rule roundoff
    total += p;
  }
  if (std::abs(total - 1.0) > tol::probability_sum) {
    throw InconsistentPovmError("outcome probabilities sum to " + std::to_string(total));
  }
  return probs;
}

// Mean and standard error of the squared errors across trials.
void finalize_monte_carlo(const std::vector<double>& estimates, double truth,
                          EstimatorReport& report) {
  const double trials = static_cast<double>(estimates.size());
  double mean = 0.0;
  double mse = 0.0;
  for (double y : estimates) {
    mean += y;
    mse += (y - truth) * (y - truth);
  }
  mean /= trials;
  mse /= trials;
  double var_sq = 0.0;
  for (double y : estimates) {
    const double sq = (y - truth) * (y - truth);
    var_sq += (sq - mse) * (sq - mse);
  }
  var_sq /= std::max(trials - 1.0, 1.0);
  report.bias = mean - truth;
  report.mse = mse;
  report.std_error = std::sqrt(var_sq / trials);
}

}  // namespace

EstimatorReport exact_bias_mse(const ParametricModel& model, const ParamPoint& theta,
                               const EstimandFunction& g, const Povm& m) {
  const DensityMatrix rho = model.state(theta);
  const std::vector<double> probs = outcome_probabilities(rho, m);
  const double truth = g(theta);
  EstimatorReport report;
  report.mode = EvalMode::exact;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double diff = m.outcomes()[k].value - truth;
    report.bias += diff * probs[k];
    report.mse += diff * diff * probs[k];
  }
  return report;
}

Observable discrete_optimal_observable(index_t dim_cut) {
  if (dim_cut < 4 || dim_cut % 2 != 0) {
    throw DomainError("observable requires an even dim_cut >= 4");
  }
  cmatrix t = cmatrix::Zero(dim_cut, dim_cut);
  for (index_t off = 0; off + 1 < dim_cut; off += 2) {
    const double i = static_cast<double>(off + 1);  // odd block index 1, 3, 5, ...
    t(off, off) = 2.0 * i - 1.0;
    t(off, off + 1) = 0.5;
    t(off + 1, off) = 0.5;
    t(off + 1, off + 1) = 2.0 * i + 0.5;
  }
  return Observable{HermMatrix(std::move(t))};
}

Observable discrete_decoupled_observable(long theta, index_t dim_cut) {
  if (theta < 1 || theta % 2 == 0) {
    throw DomainError("decoupled variant applies to odd theta only");
  }
  if (dim_cut < theta + 1) throw DomainError("dim_cut too small for the requested block");
  Observable base = discrete_optimal_observable(dim_cut);
  cmatrix t = base.op.mat();
  const index_t off = theta - 1;  // the block with index i = theta
  t(off, off) = 2.0 * static_cast<double>(theta) - 1.0;
  t(off, off + 1) = 0.0;
  t(off + 1, off) = 0.0;
  t(off + 1, off + 1) = 2.0 * static_cast<double>(theta) + 1.0;
  return Observable{HermMatrix(std::move(t))};
}

EstimatorReport simulate_concurrence_estimator(double theta, long n, long trials,
                                               std::uint64_t seed) {
  if (!(theta > -1.0 && theta < 1.0)) throw DomainError("theta must lie in (-1, 1)");
  if (n < 1 || trials < 1) throw DomainError("n and trials must be >= 1");
  const double p_plus = (1.0 + theta) / 2.0;
  const double threshold = -1.0 / std::cbrt(static_cast<double>(n));

  std::vector<double> estimates(trials);
  parallel_for(trials, [&](std::int64_t trial) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(trial)));
    long plus = 0;
    for (long i = 0; i < n; ++i) {
      if (rng.uniform() < p_plus) ++plus;
    }
    const double ybar = (2.0 * static_cast<double>(plus) - static_cast<double>(n)) /
                        static_cast<double>(n);
    estimates[trial] = ybar < threshold ? -ybar : ybar;
  });

  EstimatorReport report;
  report.mode = EvalMode::monte_carlo;
  report.n_copies = n;
  report.trials = trials;
  report.seed = seed;
  finalize_monte_carlo(estimates, std::abs(theta), report);
  return report;
}

EstimatorReport simulate_povm_sampling(const ParametricModel& model, const ParamPoint& theta,
                                       const EstimandFunction& g, const Povm& m, long n_copies,
                                       long trials, std::uint64_t seed) {
  if (n_copies < 1 || trials < 1) throw DomainError("n_copies and trials must be >= 1");
  const DensityMatrix rho = model.state(theta);
  const std::vector<double> probs = outcome_probabilities(rho, m);

  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  cumulative.back() = 1.0;  // guard the final bin against roundoff

  std::vector<double> values;
  values.reserve(m.outcomes().size());
  for (const PovmOutcome& o : m.outcomes()) values.push_back(o.value);

  std::vector<double> estimates(trials);
  parallel_for(trials, [&](std::int64_t trial) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(trial)));
    double sum = 0.0;
    for (long i = 0; i < n_copies; ++i) {
      const double u = rng.uniform();
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const std::size_t k = std::min<std::size_t>(it - cumulative.begin(), values.size() - 1);
      sum += values[k];
    }
    estimates[trial] = sum / static_cast<double>(n_copies);
  });

  EstimatorReport report;
  report.mode = EvalMode::monte_carlo;
  report.n_copies = n_copies;
  report.trials = trials;
  report.seed = seed;
  finalize_monte_carlo(estimates, g(theta), report);
  return report;
}

}  // namespace qbound
