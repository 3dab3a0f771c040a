#include "qbound/bounds.hpp"
#include "qbound/synthetic.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>

using namespace qbound;

namespace {

// Planar qubit family rho(x, y) = (I + x sx + y sy) / 2 on a box well inside
// the Bloch ball.
ParametricModel bloch_xy_model() {
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

TEST_SUITE("bounds") {

TEST_CASE("scalar information of the qubit diagonal family") {
  const ParametricModel model = concurrence_model();
  const double expected = 1.0 / (1.0 - 0.25);
  for (const Flavor flavor : {Flavor::sld, Flavor::rld}) {
    const InfoScalar finite =
        info_scalar(model, 0.5, DifferenceSpec::scalar(0.2, 0.5), flavor);
    CHECK(std::abs(finite.value - expected) <= 1e-12);
    const InfoScalar smooth = info_scalar(model, 0.5, DerivativeSpec{}, flavor);
    CHECK(std::abs(smooth.value - expected) <= 1e-10);
    CHECK(finite.flavor == flavor);
  }
}

TEST_CASE("zero information with a moving estimand is flagged infinite") {
  GaussianSampler g(42);
  const DensityMatrix a = random_full_rank_state(3, g);
  const ParametricModel constant = segment_model(a, a);
  const BoundReport r = qhcrk_bound(constant, 0.5, coordinate_estimand(),
                                    DifferenceSpec::scalar(0.25, 1.0), Flavor::sld);
  CHECK(r.infinite);
  CHECK(r.diagnostics.pinv_rank == 0);
}

TEST_CASE("derivative evaluation is reported under its own kind") {
  const BoundReport r = qhcrk_bound(concurrence_model(), 0.5, abs_estimand(),
                                    DerivativeSpec{}, Flavor::sld);
  CHECK(r.kind == BoundKind::qcr);
  CHECK(std::abs(r.value - 0.75) <= 1e-9);
}

TEST_CASE("higher-order bounds on the block family tighten with the order") {
  const ParametricModel model = discrete_model_family(16);
  const BoundReport r1 = qk_bound(model, 4.0, coordinate_estimand(), -1.0, 1, Flavor::sld);
  const BoundReport r2 = qk_bound(model, 4.0, coordinate_estimand(), -1.0, 2, Flavor::sld);
  const BoundReport r3 = qk_bound(model, 4.0, coordinate_estimand(), -1.0, 3, Flavor::sld);
  CHECK(std::abs(r1.value - 27.0 / 11.0) <= 1e-10);
  CHECK(std::abs(r2.value - 35.0 / 8.0) <= 1e-10);
  CHECK(std::abs(r3.value - 19.0 / 4.0) <= 1e-10);
  CHECK(r3.diagnostics.matrix_dim == 3);
  CHECK(r3.diagnostics.pinv_rank == 3);

  // Order one must coincide with the one-sided first-order bound.
  for (const Flavor flavor : {Flavor::sld, Flavor::rld}) {
    const BoundReport qk1 = qk_bound(model, 4.0, coordinate_estimand(), -1.0, 1, flavor);
    const BoundReport qh = qhcrk_bound(model, 4.0, coordinate_estimand(),
                                       DifferenceSpec::scalar(-1.0, 1.0), flavor);
    CHECK(std::abs(qk1.value - qh.value) <= 1e-12 * std::abs(qh.value));
  }
}

TEST_CASE("difference vector of the identity estimand is a unit vector") {
  const KoikeMatrix km =
      koike_matrix(discrete_model_family(16), 4.0, coordinate_estimand(), -1.0, 3, Flavor::sld);
  CHECK(km.v(0) == 1.0);
  CHECK(km.v(1) == 0.0);
  CHECK(km.v(2) == 0.0);
  CHECK(km.entries.rows() == 3);
  // The Gram matrix is Hermitian by construction.
  CHECK((km.entries - km.entries.adjoint()).norm() == 0.0);
}

TEST_CASE("multiparameter weighted bounds on a planar qubit family") {
  const ParametricModel model = bloch_xy_model();
  const ParamPoint theta{0.3, 0.1};
  const rmatrix identity = rmatrix::Identity(2, 2);

  const BoundReport sld = multiparam_bound(model, theta, identity, DerivativeSpec{}, Flavor::sld);
  CHECK(std::abs(sld.value - 1.9) <= 1e-9);  // 2 - |r|^2 for this family
  CHECK(sld.diagnostics.matrix_dim == 2);
  CHECK(sld.diagnostics.pinv_rank == 2);

  // The right-flavor value decomposes into the weighted trace of the inverse
  // information plus the spectral penalty of its imaginary part.
  const BoundReport rld = multiparam_bound(model, theta, identity, DerivativeSpec{}, Flavor::rld);
  const InfoMatrix info = info_matrix(model, theta, DerivativeSpec{}, Flavor::rld);
  const cmatrix inv = pinv(info.entries);
  const double rebuilt = inv.trace().real() + spabs(inv.imag().cast<complex_t>());
  CHECK(std::abs(rld.value - rebuilt) <= 1e-9 * std::max(1.0, rebuilt));
  CHECK(rld.value > 0.0);
  CHECK(rld.weight.has_value());
}

TEST_CASE("weight matrices are validated") {
  const ParametricModel model = bloch_xy_model();
  rmatrix skew(2, 2);
  skew << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(multiparam_bound(model, ParamPoint{0.1, 0.1}, skew, DerivativeSpec{},
                                   Flavor::sld),
                  DomainError);
  rmatrix indefinite(2, 2);
  indefinite << -1.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(multiparam_bound(model, ParamPoint{0.1, 0.1}, indefinite, DerivativeSpec{},
                                   Flavor::sld),
                  DomainError);
  CHECK_THROWS_AS(multiparam_bound(model, ParamPoint{0.1, 0.1}, rmatrix::Identity(3, 3),
                                   DerivativeSpec{}, Flavor::sld),
                  DomainError);
}

TEST_CASE("tensor-power information compounds one-step information") {
  const TensorPowerInfo one = tensor_power_rld_info(0.5, 1, 0.1);
  CHECK(one.value == 0.5);
  CHECK_FALSE(one.overflow);

  const TensorPowerInfo two = tensor_power_rld_info(0.5, 2, 0.1);
  CHECK(std::abs(two.value - 1.0025) <= 1e-12);
  const TensorPowerInfo five = tensor_power_rld_info(0.5, 5, 0.1);
  CHECK(std::abs(five.value - 2.5251253128125) <= 1e-10 * five.value);

  const TensorPowerInfo big = tensor_power_rld_info(1.0, 1000, 1.0);
  CHECK(big.overflow);
  CHECK(std::abs(big.log_value - 1000.0 * std::log(2.0)) <= 1e-9);

  CHECK_THROWS_AS(tensor_power_rld_info(0.5, 0, 0.1), DomainError);
  CHECK_THROWS_AS(tensor_power_rld_info(0.5, 2, 0.0), DomainError);
  CHECK_THROWS_AS(tensor_power_rld_info(-0.5, 2, 0.1), DomainError);
}

TEST_CASE("one-sided trace information agrees with the solver route") {
  GaussianSampler g(7);
  const DensityMatrix a = random_full_rank_state(4, g);
  const DensityMatrix b = random_full_rank_state(4, g);
  const ParametricModel model = segment_model(a, b);
  const InfoScalar via_trace = rld_info_via_trace(model, 0.25, 0.5);
  const InfoScalar via_solve =
      info_scalar(model, 0.25, DifferenceSpec::scalar(0.5, 1.0), Flavor::rld);
  CHECK(std::abs(via_trace.value - via_solve.value) <=
        1e-8 * std::max(1.0, std::abs(via_solve.value)));
  CHECK_THROWS_AS(rld_info_via_trace(model, 0.25, 0.0), DomainError);
}

TEST_CASE("trace information rejects support-escaping shifts") {
  GaussianSampler g(11);
  cmatrix pure = cmatrix::Zero(3, 3);
  pure(0, 0) = 1.0;
  const DensityMatrix base = DensityMatrix::from_matrix(pure);
  const DensityMatrix mixed = random_full_rank_state(3, g);
  const ParametricModel model = segment_model(base, mixed);
  CHECK_THROWS_AS(rld_info_via_trace(model, 0.0, 0.5), SingularSupportError);
}

TEST_CASE("adjacent-point exponent on the block family") {
  const ParametricModel model = discrete_model_family(16);
  const BoundReport e3 = discrete_asymptotic_exponent(model, 3.0, -1.0);
  CHECK(std::abs(e3.value - std::log(1.5)) <= 1e-10);
  CHECK(e3.kind == BoundKind::asympt_discrete);
  CHECK(e3.flavor == Flavor::rld);

  CHECK_THROWS_AS(discrete_asymptotic_exponent(model, 3.0, -2.0), DomainError);
  CHECK_THROWS_AS(discrete_asymptotic_exponent(concurrence_model(), 0.0, 0.5), DomainError);
}

TEST_CASE("relative entropy handles classical, identical and singular pairs") {
  GaussianSampler g(123);
  const DensityMatrix rho = random_full_rank_state(4, g);
  const ExtendedReal self = relative_entropy(rho, rho);
  CHECK_FALSE(self.infinite);
  CHECK(std::abs(self.value) <= 1e-12);

  cmatrix pa = cmatrix::Zero(2, 2);
  pa(0, 0) = 0.7;
  pa(1, 1) = 0.3;
  cmatrix pb = cmatrix::Zero(2, 2);
  pb(0, 0) = 0.4;
  pb(1, 1) = 0.6;
  const ExtendedReal classical =
      relative_entropy(DensityMatrix::from_matrix(pa), DensityMatrix::from_matrix(pb));
  const double expected = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
  CHECK_FALSE(classical.infinite);
  CHECK(std::abs(classical.value - expected) <= 1e-12);

  cmatrix proj = cmatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const DensityMatrix pure = DensityMatrix::from_matrix(proj);
  cmatrix half = 0.5 * cmatrix::Identity(2, 2);
  const DensityMatrix mixed = DensityMatrix::from_matrix(half);
  CHECK(relative_entropy(mixed, pure).infinite);

  const ExtendedReal pure_vs_mixed = relative_entropy(pure, mixed);
  CHECK_FALSE(pure_vs_mixed.infinite);
  CHECK(std::abs(pure_vs_mixed.value - std::log(2.0)) <= 1e-12);
}

TEST_CASE("continuous-rate bound of the qubit diagonal family near the kink") {
  const BoundReport r = asymptotic_continuous_bound(concurrence_model(), 0.0, abs_estimand(), 1.0);
  CHECK(r.kind == BoundKind::asympt_cont);
  CHECK(r.flavor == Flavor::rld);
  CHECK(std::abs(r.value - 1.0) <= 1e-4);
}

TEST_CASE("overlap trace closed form") {
  const complex_t got = gaussian_overlap_trace(0.3, -0.2, 0.1, 0.4, 1.0);
  CHECK(std::abs(got.real() - 0.9314352894229453) <= 1e-12);
  CHECK(std::abs(got.imag() - (-0.08718727350101955)) <= 1e-12);
  // Modulus depends only on the symmetric combination.
  CHECK(std::abs(std::abs(got) - std::exp((4.0 / 3.0) * -0.05)) <= 1e-14);
  CHECK_THROWS_AS(gaussian_overlap_trace(0.1, 0.1, 0.1, 0.1, 0.5), DomainError);
}

TEST_CASE("piecewise scalar closed form and its Gram assembly agree") {
  CHECK(std::abs(gaussian_koike_bound(1.0, 0.7, 1.0) - 0.8488330456918737) <= 1e-12);
  CHECK(std::abs(gaussian_koike_bound(1.0, 1.0, 2.0) - 2.6036800530008035) <= 1e-12);
  CHECK_THROWS_AS(gaussian_koike_bound(1.0, 0.0, 1.0), DomainError);

  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double theta = 0.2 * i;
      const double delta1 = 0.2 * j;
      const double closed = gaussian_koike_bound(theta, delta1, 1.0);
      const double gram = gaussian_koike_bound_gram(theta, delta1, 1.0);
      CHECK(std::abs(closed - gram) <= 1e-8 * closed);
    }
  }
}

TEST_CASE("axis bounds of the piecewise vector family") {
  const Case2Bounds mid = gaussian_case2_bounds(0.3, 1.0);
  CHECK_FALSE(mid.rld.infinite);
  CHECK(std::abs(mid.rld.value - 3.7377049180327866) <= 1e-12);
  CHECK(std::abs(mid.sld - 2.7241379310344827) <= 1e-12);

  const Case2Bounds half50 = gaussian_case2_bounds(0.5, 50.0);
  CHECK(std::abs(half50.rld.value - 150.99244962248113) <= 1e-9);
  CHECK(std::abs(half50.sld - 150.0) <= 1e-12);

  // The endpoint ratio has a removable singularity with an exact value.
  const Case2Bounds endpoint = gaussian_case2_bounds(0.0, 2.0);
  CHECK(endpoint.rld.value == 5.0);
  CHECK_FALSE(endpoint.rld.infinite);

  // Minimum-uncertainty case: the numerator vanishes away from the endpoint.
  const Case2Bounds coherent = gaussian_case2_bounds(0.4, 0.5);
  CHECK(coherent.rld.value == 0.0);
  CHECK_FALSE(coherent.rld.infinite);

  CHECK_THROWS_AS(gaussian_case2_bounds(-0.1, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_case2_bounds(1.1, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_case2_bounds(0.3, 0.49), DomainError);
}

TEST_CASE("planar finite-step bound: values, symmetry and small-step limit") {
  const Gaussian2dBound near = gaussian_2d_finite_delta_bound(-0.1, -0.1, 0.1, 0.1, 25.0);
  CHECK(near.admissible);
  CHECK(std::abs(near.value - 99.99997330558205) <= 1e-8);

  const Gaussian2dBound mixed = gaussian_2d_finite_delta_bound(-0.5, -0.3, 0.5, 0.3, 1.0);
  CHECK(mixed.admissible);
  CHECK(std::abs(mixed.value - 3.112538547411428) <= 1e-10 * mixed.value);

  // Swapping the two coordinates leaves the bound invariant.
  const Gaussian2dBound swapped = gaussian_2d_finite_delta_bound(-0.3, -0.5, 0.3, 0.5, 1.0);
  CHECK(std::abs(swapped.value - mixed.value) <= 1e-12 * mixed.value);

  // Shrinking the steps approaches four times the inverse information.
  const double h = 1e-4;
  const Gaussian2dBound tiny = gaussian_2d_finite_delta_bound(-h, -h, h, h, 1.0);
  CHECK(std::abs(tiny.value - 3.0) <= 1e-6);

  CHECK_THROWS_AS(gaussian_2d_finite_delta_bound(0.1, -0.1, 0.1, 0.1, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_2d_finite_delta_bound(-0.1, -0.1, -0.1, 0.1, 1.0), DomainError);
}

}  // TEST_SUITE
