#include "qbound/matcore.hpp"
#include "qbound/synthetic.hpp"

#include "doctest.h"

#include <cmath>

using namespace qbound;

namespace {

cmatrix pauli_x() {
  cmatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("herm matrix accepts hermitian input and symmetrizes exactly") {
  cmatrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = complex_t(0.25, 0.5);
  m(1, 0) = std::conj(m(0, 1)) + complex_t(1e-14, -1e-14);  // roundoff-level asymmetry
  m(1, 1) = -2.0;
  const HermMatrix h(m);
  CHECK((h.mat() - h.mat().adjoint()).norm() == 0.0);
  CHECK(h.dim() == 2);
}

TEST_CASE("herm matrix rejects asymmetry above tolerance") {
  cmatrix m(2, 2);
  m << 1.0, complex_t(0.0, 1e-6), 0.0, 2.0;
  CHECK_THROWS_AS(HermMatrix{m}, InvalidInputError);
}

TEST_CASE("density matrix validates trace and positivity") {
  cmatrix half = 0.5 * cmatrix::Identity(2, 2);
  const DensityMatrix rho = DensityMatrix::from_matrix(half);
  CHECK(std::abs(rho.mat().trace().real() - 1.0) <= 1e-14);

  CHECK_THROWS_AS(DensityMatrix::from_matrix(cmatrix::Identity(2, 2)), InvalidInputError);

  cmatrix indefinite(2, 2);
  indefinite << 1.1, 0.0, 0.0, -0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), InvalidInputError);
}

TEST_CASE("density matrix clips eigenvalues in the negative tolerance band") {
  cmatrix m(2, 2);
  m << 1.0 + 5e-11, 0.0, 0.0, -5e-11;
  const DensityMatrix rho = DensityMatrix::from_matrix(m);
  CHECK(rho.eigenvalues().minCoeff() >= 0.0);
  CHECK(std::abs(rho.mat().trace().real() - 1.0) <= 1e-12);
  CHECK(rho.support_dim() == 1);
}

TEST_CASE("eigendecomposition is ascending and reconstructs the input") {
  GaussianSampler g(11);
  const HermMatrix h = random_hermitian(4, g);
  const EigResult eig = eig_hermitian(h);
  for (index_t i = 1; i < 4; ++i) CHECK(eig.eigenvalues(i) >= eig.eigenvalues(i - 1));
  const cmatrix rebuilt =
      eig.eigenvectors * eig.eigenvalues.cast<complex_t>().asDiagonal() *
      eig.eigenvectors.adjoint();
  CHECK((rebuilt - h.mat()).norm() <= 1e-12 * h.mat().norm());
}

TEST_CASE("symmetric solve satisfies its defining equation") {
  cmatrix m(2, 2);
  m << 0.7, 0.0, 0.0, 0.3;
  const DensityMatrix rho = DensityMatrix::from_matrix(m);
  const HermMatrix d(pauli_x());
  const HermMatrix l = solve_sld(rho, d);
  const cmatrix residual = 0.5 * (rho.mat() * l.mat() + l.mat() * rho.mat()) - d.mat();
  CHECK(residual.norm() <= 1e-12);
  // Off-diagonal closed form: 2 D_01 / (lambda_0 + lambda_1) = 2.
  CHECK(std::abs(l.mat()(0, 1) - complex_t(2.0, 0.0)) <= 1e-12);
}

TEST_CASE("right solve satisfies rho L = D on full support") {
  GaussianSampler g(12);
  const DensityMatrix rho = random_full_rank_state(3, g, 0.3);
  const HermMatrix d = random_feasible_direction(rho, g);
  const GeneralOperator l = solve_rld(rho, d);
  CHECK((rho.mat() * l - d.mat()).norm() <= 1e-10);
}

TEST_CASE("solves reject directions with weight outside the support") {
  cmatrix m(2, 2);
  m << 1.0, 0.0, 0.0, 0.0;
  const DensityMatrix pure = DensityMatrix::from_matrix(m);
  cmatrix d(2, 2);
  d << 1.0, 0.0, 0.0, -1.0;  // acts on the null space
  CHECK_THROWS_AS(solve_sld(pure, HermMatrix(d)), SingularSupportError);
  CHECK_THROWS_AS(solve_rld(pure, HermMatrix(d)), SingularSupportError);
}

TEST_CASE("solves work on directions supported inside the state's range") {
  cmatrix m(3, 3);
  m.setZero();
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  const DensityMatrix rho = DensityMatrix::from_matrix(m);
  cmatrix d(3, 3);
  d.setZero();
  d(0, 0) = 0.25;
  d(1, 1) = -0.25;
  const HermMatrix l = solve_sld(rho, HermMatrix(d));
  const cmatrix residual = 0.5 * (rho.mat() * l.mat() + l.mat() * rho.mat()) - d;
  CHECK(residual.norm() <= 1e-12);
}

TEST_CASE("pseudo-inverse satisfies the Penrose conditions") {
  GaussianSampler g(13);
  // Rank-2 4x4 matrix from two rank-one terms.
  cvector x(4), y(4), u(4), v(4);
  for (index_t i = 0; i < 4; ++i) {
    x(i) = complex_t(g.next(), g.next());
    y(i) = complex_t(g.next(), g.next());
    u(i) = complex_t(g.next(), g.next());
    v(i) = complex_t(g.next(), g.next());
  }
  const cmatrix a = x * y.adjoint() + u * v.adjoint();
  const PinvResult p = pinv_full(a);
  CHECK(p.rank == 2);
  CHECK((a * p.inverse * a - a).norm() <= 1e-8 * a.norm());
  CHECK((p.inverse * a * p.inverse - p.inverse).norm() <= 1e-8 * p.inverse.norm());
  CHECK(((a * p.inverse).adjoint() - a * p.inverse).norm() <= 1e-8);
  CHECK(((p.inverse * a).adjoint() - p.inverse * a).norm() <= 1e-8);
}

TEST_CASE("pseudo-inverse of a diagonal projector is itself") {
  cmatrix a(2, 2);
  a << 1.0, 0.0, 0.0, 0.0;
  const PinvResult p = pinv_full(a);
  CHECK((p.inverse - a).norm() <= 1e-14);
  CHECK(p.rank == 1);
}

TEST_CASE("spectral absolute sum handles non-hermitian spectra") {
  cmatrix rot(2, 2);
  rot << 0.0, 1.0, -1.0, 0.0;  // eigenvalues +/- i
  CHECK(std::abs(spabs(rot) - 2.0) <= 1e-12);
  cmatrix diag(2, 2);
  diag << 1.0, 0.0, 0.0, -2.0;
  CHECK(std::abs(spabs(diag) - 3.0) <= 1e-12);
}

TEST_CASE("kronecker product lays out blocks row-major in the first factor") {
  cmatrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const cmatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - complex_t(1.0, 0.0)) <= 1e-15);  // a00 * b01
  CHECK(std::abs(k(0, 3) - complex_t(2.0, 0.0)) <= 1e-15);  // a01 * b01
  CHECK(std::abs(k(2, 0)) == 0.0);                          // a10 * b00
  CHECK(std::abs(k(2, 1) - complex_t(3.0, 0.0)) <= 1e-15);  // a10 * b01
}

TEST_CASE("solve is linear in the direction") {
  GaussianSampler g(14);
  const DensityMatrix rho = random_full_rank_state(4, g, 0.3);
  const HermMatrix d1 = random_feasible_direction(rho, g);
  const HermMatrix d2 = random_feasible_direction(rho, g);
  const cmatrix combo = 0.4 * d1.mat() - 1.3 * d2.mat();
  const cmatrix direct = solve_sld(rho, HermMatrix(combo)).mat();
  const cmatrix linear = 0.4 * solve_sld(rho, d1).mat() - 1.3 * solve_sld(rho, d2).mat();
  CHECK((direct - linear).norm() <= 1e-10);
}

}  // TEST_SUITE
