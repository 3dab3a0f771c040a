#include "qbound/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qbound {

double GaussianSampler::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; uniform() never returns 0 exactly after the +1 shift below.
  const double u1 = (static_cast<double>(rng_.next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = rng_.uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

HermMatrix random_hermitian(index_t dim, GaussianSampler& g) {
  cmatrix m(dim, dim);
  for (index_t r = 0; r < dim; ++r) {
    for (index_t c = 0; c < dim; ++c) m(r, c) = complex_t(g.next(), g.next());
  }
  return HermMatrix(((m + m.adjoint()) / 2.0).eval());
}

DensityMatrix random_full_rank_state(index_t dim, GaussianSampler& g, double floor) {
  cmatrix a(dim, dim);
  for (index_t r = 0; r < dim; ++r) {
    for (index_t c = 0; c < dim; ++c) a(r, c) = complex_t(g.next(), g.next());
  }
  cmatrix w = a * a.adjoint();
  w /= w.trace();
  w = (1.0 - floor) * w +
      floor / static_cast<double>(dim) * cmatrix::Identity(dim, dim);
  return DensityMatrix::from_matrix(w);
}

HermMatrix random_feasible_direction(const DensityMatrix& base, GaussianSampler& g) {
  const index_t dim = base.dim();
  HermMatrix raw = random_hermitian(dim, g);
  cmatrix d = raw.mat();
  d -= (d.trace() / static_cast<double>(dim)) * cmatrix::Identity(dim, dim);
  const double lambda_min = base.eigenvalues().minCoeff();
  Eigen::SelfAdjointEigenSolver<cmatrix> es(d, Eigen::EigenvaluesOnly);
  const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  if (norm > 0.0) d *= 0.25 * lambda_min / norm;
  return HermMatrix(((d + d.adjoint()) / 2.0).eval());
}

ParametricModel segment_model(const DensityMatrix& a, const DensityMatrix& b, double lo,
                              double hi) {
  Domain domain = Domain::box({Interval{lo, hi, false, false}});
  const cmatrix ma = a.mat();
  const cmatrix mb = b.mat();
  auto state = [ma, mb](const ParamPoint& p) {
    const double u = p.scalar();
    return DensityMatrix::from_matrix((1.0 - u) * ma + u * mb);
  };
  return ParametricModel(1, std::move(domain), a.dim(), "segment", std::move(state));
}

ParametricModel affine_model(const DensityMatrix& base, const HermMatrix& direction) {
  Domain domain = Domain::box({Interval{-1.0, 1.0, false, false}});
  const cmatrix b = base.mat();
  const cmatrix d = direction.mat();
  auto state = [b, d](const ParamPoint& p) {
    return DensityMatrix::from_matrix(b + p.scalar() * d);
  };
  return ParametricModel(1, std::move(domain), base.dim(), "affine", std::move(state));
}

ParametricModel kinked_model(const DensityMatrix& base, const HermMatrix& plus,
                             const HermMatrix& minus) {
  Domain domain = Domain::box({Interval{-1.0, 1.0, false, false}});
  const cmatrix b = base.mat();
  const cmatrix mp = plus.mat();
  const cmatrix mm = minus.mat();
  auto state = [b, mp, mm](const ParamPoint& p) {
    const double u = p.scalar();
    return DensityMatrix::from_matrix(b + u * (u >= 0.0 ? mp : mm));
  };
  return ParametricModel(1, std::move(domain), base.dim(), "kinked", std::move(state));
}

ParametricModel rotated_affine_model(const DensityMatrix& base, const HermMatrix& direction,
                                     const HermMatrix& generator) {
  Domain domain = Domain::box({Interval{-1.0, 1.0, false, false}});
  const cmatrix b = base.mat();
  const cmatrix d = direction.mat();
  Eigen::SelfAdjointEigenSolver<cmatrix> es(generator.mat());
  const cmatrix vecs = es.eigenvectors();
  const rvector vals = es.eigenvalues();
  auto state = [b, d, vecs, vals](const ParamPoint& p) {
    const double u = p.scalar();
    cvector phases(vals.size());
    for (index_t i = 0; i < vals.size(); ++i) {
      phases(i) = std::exp(complex_t(0.0, u * vals(i)));
    }
    const cmatrix rotation = vecs * phases.asDiagonal() * vecs.adjoint();
    return DensityMatrix::from_matrix(rotation * (b + u * d) * rotation.adjoint());
  };
  return ParametricModel(1, std::move(domain), base.dim(), "rotated-affine", std::move(state));
}

}  // namespace qbound
