#include "oblique/projections.hpp"

#include "oblique/diagnostics.hpp"
#include "oblique/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace oblique;
using namespace oblique::testsupport;

namespace {

FrameSequence span_of(std::initializer_list<Eigen::Vector2d> vecs) {
  std::vector<Vector> v;
  for (const auto& x : vecs) v.push_back(x);
  return FrameSequence(2, v);
}

}  // namespace

TEST_CASE("check_feasible") {
  // G inside U
  SamplingProblem nested(span_of({{1, 0}, {0, 1}}), span_of({{1, 0}}));
  CHECK(check_feasible(nested));

  // orthogonal line pair
  SamplingProblem orthogonal(span_of({{1, 0}}), span_of({{0, 1}}));
  CHECK_FALSE(check_feasible(orthogonal));

  CHECK(check_feasible(planar_example_one()));
  CHECK(angle_cos(planar_example_one()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generalized sampling on the planar example") {
  const ReconstructionOperator op = build_generalized(planar_example_one());
  Matrix q_expected(2, 2);
  q_expected << 0, 1.25, 0, 0;
  CHECK(max_abs_diff(op.measurement_to_signal, q_expected) <= 1e-12);
  CHECK(linalg::op_norm(op.measurement_to_signal) == doctest::Approx(1.25).epsilon(1e-12));

  Matrix p_expected(2, 2);
  p_expected << 1, 1.25, 0, 0;
  CHECK(max_abs_diff(op.projection, p_expected) <= 1e-12);
}

TEST_CASE("generalized sampling with matching bases is the identity") {
  FrameSequence basis = span_of({{1, 0}, {0, 1}});
  SamplingProblem p(basis, basis);
  const ReconstructionOperator op = build_generalized(p);
  CHECK(max_abs_diff(op.projection, Matrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("generalized sampling fixes the reconstruction frame") {
  std::mt19937_64 rng(43);
  const SamplingProblem p = random_feasible_problem(rng, 6);
  const ReconstructionOperator op = build_generalized(p);
  for (const Vector& g : p.reconstruction.vectors)
    CHECK((op.projection * g - g).norm() <= 1e-9);
  CHECK(max_abs_diff(op.projection * op.projection, op.projection) <= 1e-8);
}

TEST_CASE("frame-independent sampling on the planar example is the orthogonal projection") {
  const ReconstructionOperator op = build_frame_independent(planar_example_one());
  Matrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK(max_abs_diff(op.projection, expected) <= 1e-12);
}

TEST_CASE("a tight sampling frame collapses the two methods") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    SamplingProblem p = random_feasible_problem(rng, 5);
    p.sampling = canonical_tight(p.sampling);
    const ReconstructionOperator fis = build_frame_independent(p);
    const ReconstructionOperator gs = build_generalized(p);
    CHECK(max_abs_diff(fis.projection, gs.projection) <= 1e-9);
  }
}

TEST_CASE("frame-independent operator satisfies its defining structure") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const SamplingProblem p = random_feasible_problem(rng, 6);
    const ReconstructionOperator op = build_frame_independent(p);
    const Matrix& proj = op.projection;

    // idempotent with range G
    CHECK(max_abs_diff(proj * proj, proj) <= 1e-8);
    for (const Vector& g : p.reconstruction.vectors)
      CHECK((proj * g - g).norm() <= 1e-8);

    // kernel contains the complement of P_U(G)
    const Matrix proj_u = linalg::orth_proj(synthesis(p.sampling));
    const Matrix kernel_basis = linalg::orthonormal_complement_basis(
        proj_u * synthesis(p.reconstruction));
    for (Index j = 0; j < kernel_basis.cols(); ++j)
      CHECK((proj * kernel_basis.col(j)).norm() <= 1e-8);
  }
}

TEST_CASE("measurement-space vectors outside the analysis range are annihilated") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 6; ++trial) {
    const SamplingProblem p = random_feasible_problem(rng, 5);
    const Matrix analysis_range =
        synthesis(p.sampling).transpose();  // columns span R(U^*)
    const Matrix complement = linalg::orthonormal_complement_basis(analysis_range);

    for (const ReconstructionOperator& op :
         {build_generalized(p), build_frame_independent(p)}) {
      for (Index j = 0; j < complement.cols(); ++j)
        CHECK((op.measurement_to_signal * complement.col(j)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("consistent reconstruction") {
  SamplingProblem same_line(span_of({{1, 0}}), span_of({{1, 0}}));
  const ReconstructionOperator op = build_consistent(same_line);
  Matrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK(max_abs_diff(op.projection, expected) <= 1e-12);
  CHECK(op.method == Method::consistent);

  // dim U = 2 vs dim G = 1
  CHECK_THROWS_AS(build_consistent(planar_example_one()), UnsupportedError);

  SamplingProblem slanted(span_of({{1, 1}}), span_of({{1, 0}}));
  const ReconstructionOperator oblique_op = build_consistent(slanted);
  Matrix mapped(2, 2);
  mapped << 1, 1, 0, 0;  // (x, y) -> (x + y, 0)
  CHECK(max_abs_diff(oblique_op.projection, mapped) <= 1e-12);
}

TEST_CASE("consistent reconstruction interpolates every measurement") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const SamplingProblem p = random_problem_equal_dims(rng, 6);
    const ReconstructionOperator op = build_consistent(p);
    const Matrix analysis = synthesis(p.sampling).transpose();
    const Vector f = gaussian_vector(rng, 6);
    CHECK((analysis * (op.projection * f) - analysis * f).norm() <= 1e-8 * f.norm());
  }
}

TEST_CASE("built operators factor as documented") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 4; ++trial) {
    const SamplingProblem p = random_feasible_problem(rng, 7);
    const Matrix synth_u = synthesis(p.sampling);
    const Matrix synth_g = synthesis(p.reconstruction);
    for (const ReconstructionOperator& op :
         {build_generalized(p), build_frame_independent(p)}) {
      CHECK(max_abs_diff(op.measurement_to_signal, synth_g * op.coeff_map) <= 1e-10);
      CHECK(max_abs_diff(op.projection,
                         op.measurement_to_signal * synth_u.transpose()) <= 1e-10);
      CHECK(op.coeff_map.rows() == p.reconstruction.size());
      CHECK(op.coeff_map.cols() == p.sampling.size());
    }
  }
}

TEST_CASE("infeasible problems are rejected by the builders") {
  SamplingProblem orthogonal(span_of({{1, 0}}), span_of({{0, 1}}));
  CHECK_THROWS_AS(build_generalized(orthogonal), FeasibilityError);
  CHECK_THROWS_AS(build_frame_independent(orthogonal), FeasibilityError);
  CHECK_THROWS_AS(build_consistent(orthogonal), FeasibilityError);
}

TEST_CASE("measure") {
  const SamplingProblem p = planar_example_one();
  CHECK(measure(p, Eigen::Vector2d(0, 0)).values.norm() == 0.0);

  const Measurements b = measure(p, Eigen::Vector2d(3, 5));
  CHECK(b.values(0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(b.values(1) == doctest::Approx(7.4).epsilon(1e-15));

  SamplingProblem basis(span_of({{1, 0}, {0, 1}}), span_of({{1, 0}}));
  const Measurements e1 = measure(basis, Eigen::Vector2d(1, 0));
  CHECK((e1.values - Eigen::Vector2d(1, 0)).norm() == 0.0);

  CHECK_THROWS_AS(measure(p, Vector::Ones(3)), InvalidInputError);
}

TEST_CASE("reconstruct applies the coefficient map and synthesis") {
  const SamplingProblem p = planar_example_one();
  const ReconstructionOperator fis = build_frame_independent(p);
  const ReconstructionOperator gs = build_generalized(p);

  const Measurements zero{Vector::Zero(2)};
  CHECK(reconstruct(fis, zero).signal.norm() == 0.0);
  CHECK(reconstruct(fis, zero).coefficients.norm() == 0.0);

  const Measurements b = measure(p, Eigen::Vector2d(3, 5));
  const Reconstruction from_fis = reconstruct(fis, b);
  CHECK((from_fis.signal - Eigen::Vector2d(3, 0)).norm() <= 1e-12);

  const Reconstruction from_gs = reconstruct(gs, b);
  CHECK((from_gs.signal - Eigen::Vector2d(9.25, 0)).norm() <= 1e-12);
  // signal is the synthesis of the coefficients
  CHECK((synthesis(p.reconstruction) * from_gs.coefficients - from_gs.signal).norm() <=
        1e-12);

  CHECK_THROWS_AS(reconstruct(fis, Measurements{Vector::Ones(3)}), InvalidInputError);
}

TEST_CASE("consistency residual separates the two methods") {
  const SamplingProblem p = planar_example_one();
  const ReconstructionOperator fis = build_frame_independent(p);
  const ReconstructionOperator gs = build_generalized(p);

  // anything already in G is fixed by both
  CHECK(consistency_residual(fis, p, Eigen::Vector2d(2, 0)) <= 1e-12);
  CHECK(consistency_residual(gs, p, Eigen::Vector2d(2, 0)) <= 1e-12);

  // the generalized method misses the defining equations off the tight case
  CHECK(consistency_residual(gs, p, Eigen::Vector2d(3, 5)) > 1e-3);

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    const SamplingProblem q = random_feasible_problem(rng, 7);
    const ReconstructionOperator op = build_frame_independent(q);
    const Vector f = gaussian_vector(rng, 7);
    CHECK(consistency_residual(op, q, f) <= 1e-8 * f.norm());
  }
}

TEST_CASE("coincidence of all three methods at equal dimensions") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const SamplingProblem p = random_problem_equal_dims(rng, 6);
    const Matrix p_gs = build_generalized(p).projection;
    const Matrix p_fis = build_frame_independent(p).projection;
    const Matrix p_con = build_consistent(p).projection;
    CHECK(max_abs_diff(p_gs, p_fis) <= 1e-8);
    CHECK(max_abs_diff(p_gs, p_con) <= 1e-8);
  }
}

TEST_CASE("noise perturbation stays under the error bound") {
  std::mt19937_64 rng(73);
  const SamplingProblem p = random_feasible_problem(rng, 6);
  const Matrix proj_g = linalg::orth_proj(synthesis(p.reconstruction));

  for (const ReconstructionOperator& op :
       {build_generalized(p), build_frame_independent(p)}) {
    const double mu = mu_of(op, p);
    const double eta = eta_of(op);
    for (int trial = 0; trial < 200; ++trial) {
      const Vector f = gaussian_vector(rng, 6);
      const Vector noise = 0.1 * gaussian_vector(rng, p.sampling.size());
      const Vector measured = synthesis(p.sampling).transpose() * f + noise;
      const double achieved =
          (proj_g * f - op.measurement_to_signal * measured).norm();
      const double bound = error_bound(mu, eta, (f - proj_g * f).norm(), noise.norm());
      CHECK(achieved <= bound + 1e-8);
    }
  }
}
