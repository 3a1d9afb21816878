#pragma once

#include "oblique/frames.hpp"
#include "oblique/projections.hpp"
#include "oblique/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oblique::testsupport {

// Seed of the shared random problem suite; change it and every suite-based
// expectation must still hold, but runs stop being comparable.
inline constexpr std::uint64_t kSuiteSeed = 20240817ULL;

Matrix gaussian_matrix(std::mt19937_64& rng, Index rows, Index cols);
Vector gaussian_vector(std::mt19937_64& rng, Index n);

/// Frame of `count` vectors spanning a dim-dimensional subspace of R^n,
/// resampled until the synthesis matrix has conditioning fit for 1e-8-level
/// identity checks.
FrameSequence random_frame(std::mt19937_64& rng, Index n, Index dim, Index count);

/// Random problem with dim span(G) <= dim span(U), frame redundancy 1-3x,
/// resampled until cos(phi_GU) > 0.05.
SamplingProblem random_feasible_problem(std::mt19937_64& rng, Index n);

/// Deterministic suite across ambient dimensions 2..12.
std::vector<SamplingProblem> random_suite(int per_dimension = 10);

/// Like random_feasible_problem but with dim span(U) = dim span(G).
SamplingProblem random_problem_equal_dims(std::mt19937_64& rng, Index n);

/// Pseudoinverse assembled from eigendecompositions of M^T M and M M^T with a
/// hard rank cutoff; an implementation-independent route for checking pinv.
Matrix pinv_oracle(const Matrix& m, const Tolerance& tol = {});

/// Planar example: sampling {(0,1),(4/5,1)}, reconstruction {(1,0)}.
SamplingProblem planar_example_one();

/// Planar example: sampling {(1,0),(1,4/5)}, reconstruction {(1,0)}.
SamplingProblem planar_example_two();

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oblique::testsupport
