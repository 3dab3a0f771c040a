#include "qbound/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qbound {

unsigned worker_thread_count() {
  if (const char* env = std::getenv("QBOUND_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  const unsigned threads = std::min<std::int64_t>(worker_thread_count(), n);
  if (threads <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

HermMatrix::HermMatrix(cmatrix m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInputError("Hermitian matrix must be square and non-empty");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > herm_tol) {
    throw InvalidInputError("matrix is not Hermitian (max asymmetry " + std::to_string(asym) + ")");
  }
  m_ = ((m + m.adjoint()) / 2.0).eval();
}

DensityMatrix DensityMatrix::from_matrix(cmatrix m, double support_tol) {
  HermMatrix herm(std::move(m));  // validates shape and Hermiticity
  const double trace = herm.mat().trace().real();
  if (std::abs(trace - 1.0) > tol::unit_trace) {
    throw InvalidInputError("density matrix trace deviates from 1 by " +
                            std::to_string(std::abs(trace - 1.0)));
  }

  Eigen::SelfAdjointEigenSolver<cmatrix> solver(herm.mat());
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("eigendecomposition of density matrix failed");
  }
  rvector evals = solver.eigenvalues();
  const double min_eval = evals.minCoeff();
  if (min_eval < -tol::eigenvalue_clip) {
    throw InvalidInputError("density matrix has eigenvalue " + std::to_string(min_eval) +
                            " below the allowed clip");
  }

  // Clip the tiny negative eigenvalues and renormalize on the clipped spectrum.
  for (index_t i = 0; i < evals.size(); ++i) evals(i) = std::max(evals(i), 0.0);
  const double mass = evals.sum();
  if (mass <= 0.0) throw InvalidInputError("density matrix has no positive spectral mass");
  evals /= mass;

  DensityMatrix rho;
  rho.support_tol_ = support_tol;
  rho.evals_ = evals;
  rho.evecs_ = solver.eigenvectors();
  rho.m_ = rho.evecs_ * evals.asDiagonal() * rho.evecs_.adjoint();
  return rho;
}

index_t DensityMatrix::support_dim() const noexcept {
  index_t n = 0;
  for (index_t i = 0; i < evals_.size(); ++i) {
    if (evals_(i) > support_tol_) ++n;
  }
  return n;
}

EigResult eig_hermitian(const HermMatrix& h) {
  Eigen::SelfAdjointEigenSolver<cmatrix> solver(h.mat());
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("Hermitian eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Rotates D into rho's eigenbasis, verifies that it carries no significant
// weight outside rho's support, and returns the support-block of D together
// with the support eigenvalues and eigenvectors.
struct SupportProjection {
  cmatrix d_block;   // D restricted to the support, in the eigenbasis
  rvector lambdas;   // support eigenvalues (ascending)
  cmatrix basis;     // eigenvector columns spanning the support
};

SupportProjection project_to_support(const DensityMatrix& rho, const HermMatrix& d) {
  if (d.dim() != rho.dim()) {
    throw InvalidInputError("operator dimension does not match the state");
  }
  const index_t dim = rho.dim();
  const index_t supp = rho.support_dim();
  if (supp == 0) throw SingularSupportError("state has empty support");

  // Ascending eigenvalues: the support occupies the trailing block.
  const cmatrix d_eig = rho.eigenvectors().adjoint() * d.mat() * rho.eigenvectors();
  const index_t off = dim - supp;
  double outside_sq = 0.0;
  for (index_t i = 0; i < dim; ++i) {
    for (index_t j = 0; j < dim; ++j) {
      if (i >= off && j >= off) continue;
      outside_sq += std::norm(d_eig(i, j));
    }
  }
  const double allowed = tol::residual_rel * std::max(1.0, d.frobenius_norm());
  if (std::sqrt(outside_sq) > allowed) {
    throw SingularSupportError("operator has weight " + std::to_string(std::sqrt(outside_sq)) +
                               " outside the state's support");
  }

  SupportProjection p;
  p.d_block = d_eig.block(off, off, supp, supp);
  p.lambdas = rho.eigenvalues().tail(supp);
  p.basis = rho.eigenvectors().rightCols(supp);
  return p;
}

}  // namespace

HermMatrix solve_sld(const DensityMatrix& rho, const HermMatrix& d) {
  SupportProjection p = project_to_support(rho, d);
  const index_t supp = p.lambdas.size();
  cmatrix l_block(supp, supp);
  for (index_t i = 0; i < supp; ++i) {
    for (index_t j = 0; j < supp; ++j) {
      const double denom = p.lambdas(i) + p.lambdas(j);
      if (denom <= rho.support_tol() && std::abs(p.d_block(i, j)) > 0.0) {
        throw SingularSupportError("vanishing eigenvalue pair in the symmetric solve");
      }
      l_block(i, j) = 2.0 * p.d_block(i, j) / denom;
    }
  }
  cmatrix l = p.basis * l_block * p.basis.adjoint();
  return HermMatrix((l + l.adjoint()) / 2.0);
}

GeneralOperator solve_rld(const DensityMatrix& rho, const HermMatrix& d) {
  SupportProjection p = project_to_support(rho, d);
  const index_t supp = p.lambdas.size();
  cmatrix l_block(supp, supp);
  for (index_t i = 0; i < supp; ++i) {
    if (p.lambdas(i) <= rho.support_tol()) {
      throw SingularSupportError("vanishing eigenvalue in the right solve");
    }
    for (index_t j = 0; j < supp; ++j) {
      l_block(i, j) = p.d_block(i, j) / p.lambdas(i);
    }
  }
  return p.basis * l_block * p.basis.adjoint();
}

PinvResult pinv_full(const cmatrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    return {cmatrix::Zero(m.cols(), m.rows()), 0, 0.0};
  }
  Eigen::JacobiSVD<cmatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const rvector& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;

  rvector inv_sv = rvector::Zero(sv.size());
  index_t rank = 0;
  double smallest_kept = 0.0;
  for (index_t i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) {
      inv_sv(i) = 1.0 / sv(i);
      smallest_kept = sv(i);  // singular values are nonincreasing
      ++rank;
    }
  }
  PinvResult result;
  result.inverse = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
  result.rank = rank;
  result.condition = (rank > 0 && smallest_kept > 0.0) ? sv(0) / smallest_kept : 0.0;
  return result;
}

cmatrix pinv(const cmatrix& m, double rel_tol) { return pinv_full(m, rel_tol).inverse; }

double spabs(const cmatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("spabs requires a square matrix");
  if (m.rows() == 0) return 0.0;
  Eigen::ComplexEigenSolver<cmatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("eigenvalue computation failed in spabs");
  }
  return solver.eigenvalues().cwiseAbs().sum();
}

cmatrix kron(const cmatrix& a, const cmatrix& b) {
  cmatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (index_t i = 0; i < a.rows(); ++i) {
    for (index_t j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qbound
