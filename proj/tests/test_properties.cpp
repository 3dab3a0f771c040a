#include "qbound/bounds.hpp"
#include "qbound/estimators.hpp"
#include "qbound/synthetic.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace qbound;

namespace {

ParametricModel planar_qubit_model() {
  std::vector<Interval> box(2, Interval{-0.6, 0.6, false, false});
  return ParametricModel(2, Domain::box(std::move(box)), 2, "bloch-xy",
                         [](const ParamPoint& p) {
                           cmatrix m(2, 2);
                           m(0, 0) = 0.5;
                           m(1, 1) = 0.5;
                           m(0, 1) = complex_t(p[0], -p[1]) * 0.5;
                           m(1, 0) = complex_t(p[0], p[1]) * 0.5;
                           return DensityMatrix::from_matrix(m);
                         });
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("centered differences converge at second order on smooth families") {
  for (int i = 0; i < 20; ++i) {
    GaussianSampler g(500 + i);
    const index_t dim = 2 + (i % 4);
    const DensityMatrix base = random_full_rank_state(dim, g);
    const HermMatrix direction = random_feasible_direction(base, g);
    const HermMatrix generator = random_hermitian(dim, g);
    const ParametricModel model = rotated_affine_model(base, direction, generator);

    const auto diff_at = [&](double delta) {
      return state_difference(model, 0.1, DifferenceSpec::scalar(delta, 0.5));
    };
    const double d1 = (diff_at(0.2).mat() - diff_at(0.1).mat()).norm();
    const double d2 = (diff_at(0.1).mat() - diff_at(0.05).mat()).norm();
    CHECK(d2 <= 0.75 * d1 + 1e-12);
  }
}

TEST_CASE("the symmetric solve is linear in its right-hand side") {
  for (int i = 0; i < 20; ++i) {
    GaussianSampler g(900 + i);
    const index_t dim = 2 + (i % 3);
    const DensityMatrix rho = random_full_rank_state(dim, g);
    const HermMatrix d1 = random_hermitian(dim, g);
    const HermMatrix d2 = random_hermitian(dim, g);
    const double a = g.next();
    const double b = g.next();
    const cmatrix combined =
        solve_sld(rho, HermMatrix(cmatrix(a * d1.mat() + b * d2.mat()))).mat();
    const cmatrix separate = a * solve_sld(rho, d1).mat() + b * solve_sld(rho, d2).mat();
    const double scale = std::max(1.0, separate.norm());
    CHECK((combined - separate).norm() <= 1e-8 * scale);
  }
}

TEST_CASE("achievable risks dominate the lower bounds") {
  // Block family: the unbiased block observable meets or exceeds every
  // higher-order bound reachable at that point.
  const ParametricModel discrete = discrete_model_family(16);
  const Povm optimal = observable_to_pvm(discrete_optimal_observable(16));
  for (long theta = 3; theta <= 6; ++theta) {
    const double mse =
        exact_bias_mse(discrete, static_cast<double>(theta), coordinate_estimand(), optimal).mse;
    const int max_order = std::min<long>(3, theta - 1);
    for (int r = 1; r <= max_order; ++r) {
      const BoundReport bound = qk_bound(discrete, static_cast<double>(theta),
                                         coordinate_estimand(), -1.0, r, Flavor::sld);
      CHECK(mse >= bound.value - 1e-9);
    }
  }

  // Diagonal qubit family: the sign observable saturates the first-order
  // bound for every admissible step.
  const ParametricModel qubit = concurrence_model();
  cmatrix sz = cmatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  const Povm pz = observable_to_pvm(Observable{HermMatrix(sz)});
  GaussianSampler g(77);
  for (int i = 0; i < 25; ++i) {
    const double theta = -0.8 + 1.6 * g.rng().uniform();
    const double delta = 0.05 + 0.1 * g.rng().uniform();
    const double t = g.rng().uniform();
    const double mse = exact_bias_mse(qubit, theta, coordinate_estimand(), pz).mse;
    for (const Flavor flavor : {Flavor::sld, Flavor::rld}) {
      const BoundReport bound = qhcrk_bound(qubit, theta, coordinate_estimand(),
                                            DifferenceSpec::scalar(delta, t), flavor);
      CHECK(mse >= bound.value - 1e-9);
      CHECK(std::abs(mse - bound.value) <= 1e-9);  // this estimator is optimal here
    }
  }
}

TEST_CASE("relative entropy is additive over tensor products") {
  for (int i = 0; i < 10; ++i) {
    GaussianSampler g(1300 + i);
    const index_t dim = 2 + (i % 2);
    const DensityMatrix rho = random_full_rank_state(dim, g);
    const DensityMatrix sigma = random_full_rank_state(dim, g);
    const ExtendedReal single = relative_entropy(sigma, rho);
    REQUIRE_FALSE(single.infinite);
    const DensityMatrix rho2 = DensityMatrix::from_matrix(kron(rho.mat(), rho.mat()));
    const DensityMatrix sigma2 = DensityMatrix::from_matrix(kron(sigma.mat(), sigma.mat()));
    const ExtendedReal doubled = relative_entropy(sigma2, rho2);
    REQUIRE_FALSE(doubled.infinite);
    CHECK(std::abs(doubled.value - 2.0 * single.value) <= 1e-9 * std::max(1.0, single.value));
  }
}

TEST_CASE("information matrices carry the structure of their flavor") {
  const ParametricModel model = planar_qubit_model();
  GaussianSampler g(1700);
  for (int i = 0; i < 15; ++i) {
    const double x = -0.4 + 0.8 * g.rng().uniform();
    const double y = -0.4 + 0.8 * g.rng().uniform();
    const ParamPoint p{x, y};

    const InfoMatrix sld = info_matrix(model, p, DerivativeSpec{}, Flavor::sld);
    CHECK(sld.entries.imag().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((sld.entries - sld.entries.transpose()).norm() <= 1e-9);

    const InfoMatrix rld = info_matrix(model, p, DerivativeSpec{}, Flavor::rld);
    CHECK((rld.entries - rld.entries.adjoint()).norm() <= 1e-9);
    for (index_t k = 0; k < 2; ++k) {
      CHECK(rld.entries(k, k).real() > 0.0);
      CHECK(std::abs(rld.entries(k, k).imag()) <= 1e-10);
    }
    // The right-flavor information dominates the symmetric one in the
    // positive-semidefinite order.
    Eigen::SelfAdjointEigenSolver<cmatrix> gap(rld.entries - sld.entries);
    CHECK(gap.eigenvalues().minCoeff() >= -1e-8);
  }
}

TEST_CASE("monte-carlo error bars shrink like the square root of the trials") {
  const EstimatorReport small = simulate_concurrence_estimator(0.3, 64, 400, 2025);
  const EstimatorReport large = simulate_concurrence_estimator(0.3, 64, 1600, 2025);
  REQUIRE(small.std_error > 0.0);
  const double ratio = large.std_error / small.std_error;
  CHECK(ratio >= 0.3);
  CHECK(ratio <= 0.8);
}

}  // TEST_SUITE
