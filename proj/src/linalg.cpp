#include "oblique/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace oblique::linalg {

namespace {

void require_finite(const Matrix& m, const char* op) {
  if (m.rows() < 1 || m.cols() < 1)
    throw InvalidInputError(std::string(op) + ": empty matrix");
  if (!m.allFinite())
    throw InvalidInputError(std::string(op) + ": non-finite entries");
}

Eigen::JacobiSVD<Matrix> full_svd(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

double rank_cutoff(const Vector& sigma, const Matrix& m, const Tolerance& tol) {
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  return tol.rank_scale(m.rows(), m.cols()) * sigma_max;
}

}  // namespace

Matrix pinv(const Matrix& m, const Tolerance& tol) {
  tol.validate();
  require_finite(m, "pinv");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  const double cutoff = rank_cutoff(sigma, m, tol);
  Vector inv_sigma = Vector::Zero(sigma.size());
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) inv_sigma(i) = 1.0 / sigma(i);
  return svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
}

Matrix psd_sqrt_pinv(const Matrix& m, const Tolerance& tol) {
  tol.validate();
  require_finite(m, "psd_sqrt_pinv");
  if (m.rows() != m.cols())
    throw InvalidInputError("psd_sqrt_pinv: matrix must be square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol.abs_check_tol)
    throw InvalidInputError("psd_sqrt_pinv: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.transpose()));
  Vector lambda = eig.eigenvalues();
  const double lambda_max = std::max(lambda.maxCoeff(), 0.0);
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -tol.abs_check_tol)
      throw InvalidInputError("psd_sqrt_pinv: matrix is indefinite");
    if (lambda(i) < 0.0) lambda(i) = 0.0;  // PSD clamp
  }
  const double cutoff = tol.rank_scale(m.rows(), m.cols()) * lambda_max;
  Vector inv_sqrt = Vector::Zero(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) > cutoff) inv_sqrt(i) = 1.0 / std::sqrt(lambda(i));
  Matrix x = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
  return 0.5 * (x + x.transpose());
}

Matrix orth_proj(const Matrix& m, const Tolerance& tol) {
  // U_r U_r^T with U_r the leading left singular vectors; equals m * pinv(m).
  const Matrix basis = orthonormal_range_basis(m, tol);
  if (basis.cols() == 0) return Matrix::Zero(m.rows(), m.rows());
  Matrix p = basis * basis.transpose();
  return 0.5 * (p + p.transpose());
}

double op_norm(const Matrix& m) {
  require_finite(m, "op_norm");
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

Index num_rank(const Matrix& m, const Tolerance& tol) {
  tol.validate();
  require_finite(m, "num_rank");
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sigma = svd.singularValues();
  const double cutoff = rank_cutoff(sigma, m, tol);
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++r;
  return r;
}

Matrix orthonormal_range_basis(const Matrix& m, const Tolerance& tol) {
  tol.validate();
  require_finite(m, "orthonormal_range_basis");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const Vector& sigma = svd.singularValues();
  const double cutoff = rank_cutoff(sigma, m, tol);
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix orthonormal_complement_basis(const Matrix& m, const Tolerance& tol) {
  tol.validate();
  require_finite(m, "orthonormal_complement_basis");
  Eigen::JacobiSVD<Matrix> svd = full_svd(m);
  const Vector& sigma = svd.singularValues();
  const double cutoff = rank_cutoff(sigma, m, tol);
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++r;
  return svd.matrixU().rightCols(m.rows() - r);
}

double principal_angle_cos_oracle(const Matrix& s_basis, const Matrix& w_basis,
                                  const Tolerance& tol) {
  tol.validate();
  require_finite(s_basis, "principal_angle_cos_oracle");
  require_finite(w_basis, "principal_angle_cos_oracle");
  if (s_basis.rows() != w_basis.rows())
    throw InvalidInputError("principal_angle_cos_oracle: ambient dimensions differ");

  const Matrix qs = orthonormal_range_basis(s_basis, tol);
  const Matrix qw = orthonormal_range_basis(w_basis, tol);
  if (qs.cols() == 0 || qw.cols() == 0)
    throw InvalidInputError("principal_angle_cos_oracle: zero subspace");

  // inf over unit s of |P_W s| = smallest singular value of the map
  // a -> Q_W^T Q_S a; the map has a kernel when dim S > dim W.
  if (qs.cols() > qw.cols()) return 0.0;
  const Matrix cross = qw.transpose() * qs;
  const double smin = Eigen::JacobiSVD<Matrix>(cross).singularValues().minCoeff();
  return std::clamp(smin, 0.0, 1.0);
}

}  // namespace oblique::linalg
