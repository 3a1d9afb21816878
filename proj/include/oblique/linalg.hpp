#pragma once

#include "oblique/types.hpp"

namespace oblique::linalg {

/// Moore-Penrose pseudoinverse via SVD with a relative rank cutoff:
/// singular values sigma <= rank_scale * sigma_max are treated as zero.
Matrix pinv(const Matrix& m, const Tolerance& tol = {});

/// Square root of the pseudoinverse of a symmetric PSD matrix, computed by
/// symmetric eigendecomposition. Eigenvalues in (-abs_check_tol, 0) are
/// clamped to zero; anything more negative is rejected as indefinite.
/// The result x is symmetric PSD with x * x = pinv(m).
Matrix psd_sqrt_pinv(const Matrix& m, const Tolerance& tol = {});

/// Orthogonal projector onto the column space of m (equals m * pinv(m)).
Matrix orth_proj(const Matrix& m, const Tolerance& tol = {});

/// Largest singular value.
double op_norm(const Matrix& m);

/// Number of singular values above the relative cutoff; 0 for the zero matrix.
Index num_rank(const Matrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the column space of m (n x rank), rank-revealing.
Matrix orthonormal_range_basis(const Matrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the orthogonal complement of the column space of m,
/// n x (n - rank). Empty (n x 0) when m has full row rank.
Matrix orthonormal_complement_basis(const Matrix& m, const Tolerance& tol = {});

/// cos of the subspace angle phi_SW = inf over unit s in span(S) of |P_W s|,
/// computed from orthonormalized bases: the smallest singular value of
/// Q_W^T * Q_S (zero when dim S exceeds dim W). Serves as the independent
/// oracle for the eigenvalue-formula route in diagnostics.
double principal_angle_cos_oracle(const Matrix& s_basis, const Matrix& w_basis,
                                  const Tolerance& tol = {});

}  // namespace oblique::linalg
