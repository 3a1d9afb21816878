#pragma once

#include "oblique/types.hpp"

#include <vector>

namespace oblique {

/// Finite ordered list of vectors in R^n. The span of the vectors is the
/// subspace the sequence frames; redundant and zero vectors are allowed,
/// an all-zero sequence is not.
struct FrameSequence {
  Index ambient_dim = 0;
  std::vector<Vector> vectors;

  FrameSequence() = default;
  FrameSequence(Index n, std::vector<Vector> vecs);

  /// Builds a sequence from the columns of an n x m matrix.
  static FrameSequence from_columns(const Matrix& columns);

  Index size() const { return static_cast<Index>(vectors.size()); }
  void validate() const;
};

/// Optimal two-sided norm-equivalence constants of a frame sequence on its span.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// n x m matrix whose j-th column is the j-th frame vector. Its transpose is
/// the analysis operator f -> {<f, u_j>}.
Matrix synthesis(const FrameSequence& fs);

/// Frame operator: synthesis * synthesis^T (n x n, symmetric PSD).
Matrix frame_operator(const FrameSequence& fs);

/// Optimal frame bounds: the smallest and largest nonzero eigenvalues of the
/// frame operator, with the rank cutoff deciding "nonzero".
FrameBounds frame_bounds(const FrameSequence& fs, const Tolerance& tol = {});

/// Canonical tight frame {S^{dagger/2} u_j}: a tight frame for the same span
/// with frame bound 1.
FrameSequence canonical_tight(const FrameSequence& fs, const Tolerance& tol = {});

/// True iff the frame vectors are linearly independent.
bool is_riesz(const FrameSequence& fs, const Tolerance& tol = {});

}  // namespace oblique
