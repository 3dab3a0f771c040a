#pragma once

// Complex Hermitian linear-algebra kernel: validated Hermitian/density
// matrices, eigendecomposition, the symmetric and right logarithmic-derivative
// solves, Moore-Penrose pseudo-inverse and the spectral absolute trace.

#include "qbound/common.hpp"

namespace qbound {

// An operator with no symmetry constraint (e.g. a right logarithmic
// derivative, which is generally non-Hermitian).
using GeneralOperator = cmatrix;

// A validated Hermitian matrix. Construction checks Hermiticity entrywise and
// stores the exactly symmetrized matrix (M + M^dagger)/2 so downstream
// eigensolves never see roundoff asymmetry.
class HermMatrix {
 public:
  HermMatrix() = default;

  // Throws InvalidInputError if max_ij |M_ij - conj(M_ji)| > herm_tol.
  explicit HermMatrix(cmatrix m, double herm_tol = tol::hermiticity);

  const cmatrix& mat() const noexcept { return m_; }
  index_t dim() const noexcept { return m_.rows(); }
  double frobenius_norm() const { return m_.norm(); }

 private:
  cmatrix m_;
};

// A validated density matrix: Hermitian, unit trace, positive semidefinite up
// to a small clip. The eigendecomposition is computed once at construction
// and cached; eigenvalues are ascending.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  // Validates Hermiticity (1e-12), trace (|Tr - 1| <= 1e-10) and positivity:
  // eigenvalues in [-1e-10, 0) are clipped to zero and the state renormalized;
  // anything more negative raises InvalidInputError. support_tol controls
  // which eigenvalues count as the support in later solves.
  static DensityMatrix from_matrix(cmatrix m, double support_tol = tol::support);

  const cmatrix& mat() const noexcept { return m_; }
  index_t dim() const noexcept { return m_.rows(); }
  double support_tol() const noexcept { return support_tol_; }

  // Eigenvalues ascending; eigenvectors() columns match their order.
  const rvector& eigenvalues() const noexcept { return evals_; }
  const cmatrix& eigenvectors() const noexcept { return evecs_; }

  // Number of eigenvalues strictly above support_tol (they sit at the top of
  // the ascending eigenvalue list).
  index_t support_dim() const noexcept;

 private:
  cmatrix m_;
  double support_tol_ = tol::support;
  rvector evals_;
  cmatrix evecs_;
};

struct EigResult {
  rvector eigenvalues;  // ascending
  cmatrix eigenvectors; // unitary columns, same order
};

// Spectral decomposition of a Hermitian matrix: H = U diag(lambda) U^dagger.
EigResult eig_hermitian(const HermMatrix& h);

// Symmetric logarithmic-derivative solve: the Hermitian L with
// (rho L + L rho)/2 = D, computed in rho's eigenbasis as
// L_ij = 2 D_ij / (lambda_i + lambda_j) on the support.
// Throws SingularSupportError if D has weight outside rho's support larger
// than 1e-9 * max(1, ||D||_F).
HermMatrix solve_sld(const DensityMatrix& rho, const HermMatrix& d);

// Right logarithmic-derivative solve: L = rho^{-1} D on the support, i.e.
// L_ij = D_ij / lambda_i in rho's eigenbasis. Same support conditions as
// solve_sld.
GeneralOperator solve_rld(const DensityMatrix& rho, const HermMatrix& d);

struct PinvResult {
  cmatrix inverse;
  index_t rank = 0;       // singular values kept
  double condition = 0.0; // largest / smallest kept singular value
};

// Moore-Penrose pseudo-inverse with singular values below
// tol * (largest singular value) treated as zero.
PinvResult pinv_full(const cmatrix& m, double rel_tol = tol::pinv_rel);
cmatrix pinv(const cmatrix& m, double rel_tol = tol::pinv_rel);

// Sum of the absolute values (complex moduli) of the eigenvalues of a square
// matrix, computed from a general (non-Hermitian) eigensolve.
double spabs(const cmatrix& m);

// Kronecker (tensor) product, used for multi-mode states.
cmatrix kron(const cmatrix& a, const cmatrix& b);

}  // namespace qbound
