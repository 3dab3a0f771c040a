#include "qbound/bounds.hpp"
#include "qbound/estimators.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace qbound;

namespace {

Povm sigma_z_pvm() {
  cmatrix sz = cmatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  return observable_to_pvm(Observable{HermMatrix(sz)});
}

Povm constant_povm(index_t dim, double value) {
  PovmOutcome o;
  o.value = value;
  o.element = HermMatrix(cmatrix(cmatrix::Identity(dim, dim)));
  return Povm({o});
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("generator matches the published splitmix64 stream") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);

  SplitMix64 u(12345);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("substreams are deterministic and distinct") {
  CHECK(substream_seed(99, 0) == substream_seed(99, 0));
  CHECK(substream_seed(99, 0) != substream_seed(99, 1));
  CHECK(substream_seed(99, 1) != substream_seed(100, 1));
}

TEST_CASE("povm construction validates positivity and completeness") {
  cmatrix e1 = cmatrix::Zero(2, 2);
  e1(0, 0) = 0.6;
  cmatrix e2 = cmatrix::Zero(2, 2);
  e2(0, 0) = 0.3;
  e2(1, 1) = 1.0;
  CHECK_THROWS_AS(Povm({PovmOutcome{0.0, HermMatrix(e1)}, PovmOutcome{1.0, HermMatrix(e2)}}),
                  InvalidInputError);

  cmatrix neg = cmatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  cmatrix comp = cmatrix::Identity(2, 2) - neg;
  CHECK_THROWS_AS(Povm({PovmOutcome{0.0, HermMatrix(neg)}, PovmOutcome{1.0, HermMatrix(comp)}}),
                  InvalidInputError);

  CHECK_THROWS_AS(Povm(std::vector<PovmOutcome>{}), InvalidInputError);
}

TEST_CASE("observables decompose into projection-valued measures") {
  const Povm pz = sigma_z_pvm();
  REQUIRE(pz.outcomes().size() == 2);
  CHECK(pz.outcomes()[0].value == -1.0);  // outcomes follow ascending eigenvalues
  CHECK(pz.outcomes()[1].value == 1.0);
  CHECK(std::abs(pz.outcomes()[0].element.mat()(1, 1).real() - 1.0) <= 1e-14);
  CHECK(std::abs(pz.outcomes()[0].element.mat()(0, 0).real()) <= 1e-14);

  const Povm pid = observable_to_pvm(Observable{HermMatrix(cmatrix(cmatrix::Identity(3, 3)))});
  CHECK(pid.outcomes().size() == 1);
  CHECK(pid.outcomes()[0].value == 1.0);
}

TEST_CASE("near-degenerate eigenvalues merge and the pvm reconstructs the observable") {
  cmatrix t = cmatrix::Zero(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = 1.0 + 1e-12;
  t(2, 2) = 2.0;
  const Observable obs{HermMatrix(t)};
  const Povm pvm = observable_to_pvm(obs);
  REQUIRE(pvm.outcomes().size() == 2);
  CHECK(std::abs(pvm.outcomes()[0].value - 1.0) <= 1e-12);

  cmatrix rebuilt = cmatrix::Zero(3, 3);
  for (const PovmOutcome& o : pvm.outcomes()) rebuilt += o.value * o.element.mat();
  CHECK((rebuilt - t).cwiseAbs().maxCoeff() <= tol::grouping * 3 * 2.0);
}

TEST_CASE("exact evaluation of the sign observable on the diagonal qubit family") {
  const ParametricModel model = concurrence_model();
  const Povm pz = sigma_z_pvm();
  const EstimatorReport at03 = exact_bias_mse(model, 0.3, coordinate_estimand(), pz);
  CHECK(std::abs(at03.bias) <= 1e-14);
  CHECK(std::abs(at03.mse - 0.91) <= 1e-12);
  CHECK(at03.mode == EvalMode::exact);

  // At the center the variance meets the first-order bound exactly.
  const EstimatorReport at0 = exact_bias_mse(model, 0.0, coordinate_estimand(), pz);
  const BoundReport bound = qhcrk_bound(model, 0.0, coordinate_estimand(),
                                        DifferenceSpec::scalar(0.5, 1.0), Flavor::sld);
  CHECK(std::abs(at0.mse - 1.0) <= 1e-12);
  CHECK(std::abs(at0.mse - bound.value) <= 1e-9);

  CHECK(at03.mse >= at03.bias * at03.bias - 1e-12);
  CHECK_THROWS_AS(
      exact_bias_mse(model, 0.3, coordinate_estimand(),
                     observable_to_pvm(Observable{HermMatrix(cmatrix(cmatrix::Identity(3, 3)))})),
      InvalidInputError);
}

TEST_CASE("block observable entries and validation") {
  const Observable t = discrete_optimal_observable(16);
  const cmatrix& m = t.op.mat();
  CHECK(m(0, 0).real() == 1.0);
  CHECK(m(0, 1).real() == 0.5);
  CHECK(m(1, 1).real() == 2.5);
  CHECK(m(2, 2).real() == 5.0);
  CHECK(m(2, 3).real() == 0.5);
  CHECK(m(3, 3).real() == 6.5);
  CHECK(m(4, 4).real() == 9.0);
  CHECK(std::abs(m(1, 2)) == 0.0);  // blocks do not couple

  CHECK_THROWS_AS(discrete_optimal_observable(7), DomainError);
  CHECK_THROWS_AS(discrete_optimal_observable(2), DomainError);
}

TEST_CASE("decoupled block observable replaces one block by its diagonal") {
  const Observable t = discrete_decoupled_observable(5, 16);
  const cmatrix& m = t.op.mat();
  CHECK(m(4, 4).real() == 9.0);
  CHECK(m(5, 5).real() == 11.0);
  CHECK(std::abs(m(4, 5)) == 0.0);
  // Other blocks keep the coupled form.
  CHECK(m(0, 1).real() == 0.5);
  CHECK(m(2, 3).real() == 0.5);

  CHECK_THROWS_AS(discrete_decoupled_observable(4, 16), DomainError);
  CHECK_THROWS_AS(discrete_decoupled_observable(15, 8), DomainError);
}

TEST_CASE("block observables are unbiased with the closed-form risk") {
  const ParametricModel model = discrete_model_family(16);
  const Povm optimal = observable_to_pvm(discrete_optimal_observable(16));
  const EstimatorReport even = exact_bias_mse(model, 4.0, coordinate_estimand(), optimal);
  CHECK(std::abs(even.bias) <= 1e-10);
  CHECK(std::abs(even.mse - 4.75) <= 1e-9);  // theta^2/3 - 7/12 at theta = 4

  const Povm decoupled = observable_to_pvm(discrete_decoupled_observable(5, 16));
  const EstimatorReport odd = exact_bias_mse(model, 5.0, coordinate_estimand(), decoupled);
  CHECK(std::abs(odd.bias) <= 1e-10);
  CHECK(std::abs(odd.mse - 7.8) <= 1e-9);  // theta^2/3 - 7/12 + 1/(4 theta) at theta = 5
}

TEST_CASE("folded-mean simulation is deterministic in the seed") {
  const EstimatorReport a = simulate_concurrence_estimator(0.6, 100, 200, 31);
  const EstimatorReport b = simulate_concurrence_estimator(0.6, 100, 200, 31);
  CHECK(a.mse == b.mse);
  CHECK(a.bias == b.bias);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mode == EvalMode::monte_carlo);
  CHECK(a.n_copies == 100);
  CHECK(a.trials == 200);
  CHECK(a.seed == 31);

  const EstimatorReport c = simulate_concurrence_estimator(0.6, 100, 200, 32);
  CHECK(c.mse != a.mse);

  // The fixed-seed run lands near the asymptotic risk (1 - theta^2) / n.
  const double target = (1.0 - 0.36) / 100.0;
  CHECK(std::abs(a.mse - target) <= 5.0 * a.std_error + 0.02 * target);

  CHECK_THROWS_AS(simulate_concurrence_estimator(1.0, 100, 200, 31), DomainError);
  CHECK_THROWS_AS(simulate_concurrence_estimator(0.5, 0, 200, 31), DomainError);
  CHECK_THROWS_AS(simulate_concurrence_estimator(0.5, 100, 0, 31), DomainError);
}

TEST_CASE("born-rule sampling reproduces the exact risk within its error bar") {
  const ParametricModel model = discrete_model_family(16);
  const Povm pvm = observable_to_pvm(discrete_optimal_observable(16));
  const EstimatorReport exact = exact_bias_mse(model, 4.0, coordinate_estimand(), pvm);
  const EstimatorReport mc =
      simulate_povm_sampling(model, 4.0, coordinate_estimand(), pvm, 1, 4000, 77);
  CHECK(mc.mode == EvalMode::monte_carlo);
  CHECK(std::abs(mc.mse - exact.mse) <= 4.0 * mc.std_error);

  const EstimatorReport again =
      simulate_povm_sampling(model, 4.0, coordinate_estimand(), pvm, 1, 4000, 77);
  CHECK(again.mse == mc.mse);
  CHECK(again.bias == mc.bias);
}

TEST_CASE("a constant estimator has deterministic error") {
  const ParametricModel model = concurrence_model();
  const Povm constant = constant_povm(2, 0.25);
  const EstimatorReport exact = exact_bias_mse(model, 0.1, coordinate_estimand(), constant);
  CHECK(std::abs(exact.bias - (0.25 - 0.1)) <= 1e-15);
  CHECK(std::abs(exact.mse - (0.25 - 0.1) * (0.25 - 0.1)) <= 1e-15);

  const EstimatorReport mc =
      simulate_povm_sampling(model, 0.1, coordinate_estimand(), constant, 3, 50, 5);
  CHECK(std::abs(mc.mse - exact.mse) <= 1e-15);
  CHECK(mc.std_error <= 1e-15);
}

}  // TEST_SUITE
