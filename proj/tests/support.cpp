#include "support.hpp"

#include "oblique/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oblique::testsupport {

namespace {

double pseudo_kappa(const Matrix& m, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sigma = svd.singularValues();
  const double cutoff = tol.rank_scale(m.rows(), m.cols()) * sigma(0);
  double smin = sigma(0);
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff && sigma(i) < smin) smin = sigma(i);
  return sigma(0) / smin;
}

}  // namespace

Matrix gaussian_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}

Vector gaussian_vector(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = gauss(rng);
  return v;
}

FrameSequence random_frame(std::mt19937_64& rng, Index n, Index dim, Index count) {
  const Tolerance tol;
  for (;;) {
    const Matrix basis =
        linalg::orthonormal_range_basis(gaussian_matrix(rng, n, dim), tol);
    if (basis.cols() != dim) continue;
    const Matrix synth = basis * gaussian_matrix(rng, dim, count);
    if (linalg::num_rank(synth, tol) != dim) continue;
    if (pseudo_kappa(synth, tol) > 1e3) continue;
    return FrameSequence::from_columns(synth);
  }
}

SamplingProblem random_feasible_problem(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<Index> dim_g_dist(1, std::max<Index>(1, n - 1));
  std::uniform_int_distribution<int> redundancy(1, 3);
  for (;;) {
    const Index dim_g = dim_g_dist(rng);
    std::uniform_int_distribution<Index> dim_u_dist(dim_g, n);
    const Index dim_u = dim_u_dist(rng);
    SamplingProblem p(random_frame(rng, n, dim_u, dim_u * redundancy(rng)),
                      random_frame(rng, n, dim_g, dim_g * redundancy(rng)));
    const double cos_phi = linalg::principal_angle_cos_oracle(
        synthesis(p.reconstruction), synthesis(p.sampling));
    if (cos_phi > 0.05) return p;
  }
}

std::vector<SamplingProblem> random_suite(int per_dimension) {
  std::mt19937_64 rng(kSuiteSeed);
  std::vector<SamplingProblem> suite;
  for (Index n = 2; n <= 12; ++n)
    for (int k = 0; k < per_dimension; ++k)
      suite.push_back(random_feasible_problem(rng, n));
  return suite;
}

SamplingProblem random_problem_equal_dims(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<Index> dim_dist(1, std::max<Index>(1, n - 1));
  std::uniform_int_distribution<int> redundancy(1, 3);
  for (;;) {
    const Index dim = dim_dist(rng);
    SamplingProblem p(random_frame(rng, n, dim, dim * redundancy(rng)),
                      random_frame(rng, n, dim, dim * redundancy(rng)));
    const double cos_phi = linalg::principal_angle_cos_oracle(
        synthesis(p.reconstruction), synthesis(p.sampling));
    if (cos_phi > 0.05) return p;
  }
}

Matrix pinv_oracle(const Matrix& m, const Tolerance& tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> right(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<Matrix> left(m * m.transpose());

  // Ascending eigenvalues from both solvers; walk them from the top so the
  // i-th left/right vectors pair up as a singular triple.
  const Index max_rank = std::min(m.rows(), m.cols());
  std::vector<double> sigma(static_cast<std::size_t>(max_rank));
  for (Index i = 0; i < max_rank; ++i)
    sigma[static_cast<std::size_t>(i)] = std::sqrt(
        std::max(right.eigenvalues()(m.cols() - 1 - i), 0.0));

  const double sigma_max = sigma.empty() ? 0.0 : sigma[0];
  const double cutoff = tol.rank_scale(m.rows(), m.cols()) * sigma_max;

  Matrix result = Matrix::Zero(m.cols(), m.rows());
  for (Index i = 0; i < max_rank; ++i) {
    if (sigma[static_cast<std::size_t>(i)] <= cutoff) break;
    const Vector v = right.eigenvectors().col(m.cols() - 1 - i);
    const Vector u = left.eigenvectors().col(m.rows() - 1 - i);
    // Signed singular value absorbs the solvers' independent sign choices.
    const double d = u.dot(m * v);
    result += v * u.transpose() / d;
  }
  return result;
}

SamplingProblem planar_example_one() {
  FrameSequence sampling(2, {Eigen::Vector2d(0.0, 1.0), Eigen::Vector2d(0.8, 1.0)});
  FrameSequence reconstruction(2, {Eigen::Vector2d(1.0, 0.0)});
  return SamplingProblem(sampling, reconstruction);
}

SamplingProblem planar_example_two() {
  FrameSequence sampling(2, {Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(1.0, 0.8)});
  FrameSequence reconstruction(2, {Eigen::Vector2d(1.0, 0.0)});
  return SamplingProblem(sampling, reconstruction);
}

}  // namespace oblique::testsupport
