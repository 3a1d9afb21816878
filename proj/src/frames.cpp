#include "oblique/frames.hpp"

#include "oblique/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <utility>

namespace oblique {

FrameSequence::FrameSequence(Index n, std::vector<Vector> vecs)
    : ambient_dim(n), vectors(std::move(vecs)) {
  validate();
}

FrameSequence FrameSequence::from_columns(const Matrix& columns) {
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<std::size_t>(columns.cols()));
  for (Index j = 0; j < columns.cols(); ++j) vecs.push_back(columns.col(j));
  return FrameSequence(columns.rows(), std::move(vecs));
}

void FrameSequence::validate() const {
  if (ambient_dim < 1)
    throw InvalidInputError("FrameSequence: ambient dimension must be >= 1");
  if (vectors.empty())
    throw InvalidInputError("FrameSequence: needs at least one vector");
  bool any_nonzero = false;
  for (const Vector& v : vectors) {
    if (v.size() != ambient_dim)
      throw InvalidInputError("FrameSequence: vector length differs from ambient dimension");
    if (!v.allFinite())
      throw InvalidInputError("FrameSequence: non-finite entries");
    if (v.squaredNorm() > 0.0) any_nonzero = true;
  }
  if (!any_nonzero)
    throw InvalidInputError("FrameSequence: all vectors are zero");
}

Matrix synthesis(const FrameSequence& fs) {
  fs.validate();
  Matrix m(fs.ambient_dim, fs.size());
  for (Index j = 0; j < fs.size(); ++j) m.col(j) = fs.vectors[static_cast<std::size_t>(j)];
  return m;
}

Matrix frame_operator(const FrameSequence& fs) {
  const Matrix u = synthesis(fs);
  return u * u.transpose();
}

FrameBounds frame_bounds(const FrameSequence& fs, const Tolerance& tol) {
  tol.validate();
  const Matrix s = frame_operator(fs);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  const Vector& lambda = eig.eigenvalues();
  const double lambda_max = lambda.maxCoeff();
  const double cutoff = tol.rank_scale(s.rows(), s.cols()) * lambda_max;
  if (lambda_max <= 0.0)
    throw InvalidInputError("frame_bounds: zero frame operator");

  double lower = lambda_max;
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) > cutoff && lambda(i) < lower) lower = lambda(i);
  return FrameBounds{lower, lambda_max};
}

FrameSequence canonical_tight(const FrameSequence& fs, const Tolerance& tol) {
  const Matrix root = linalg::psd_sqrt_pinv(frame_operator(fs), tol);
  std::vector<Vector> vecs;
  vecs.reserve(fs.vectors.size());
  for (const Vector& v : fs.vectors) vecs.push_back(root * v);
  return FrameSequence(fs.ambient_dim, std::move(vecs));
}

bool is_riesz(const FrameSequence& fs, const Tolerance& tol) {
  return linalg::num_rank(synthesis(fs), tol) == fs.size();
}

}  // namespace oblique
