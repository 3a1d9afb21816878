#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>

namespace oblique {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Bad values or shapes handed to a library function.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The sampling/reconstruction pair is transversal-degenerate (cos phi ~ 0);
/// no stable oblique projection exists.
class FeasibilityError : public std::runtime_error {
 public:
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested configuration the library deliberately does not handle.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal numerical identity failed beyond its slack.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical tolerances shared by every rank-revealing operation.
///
/// rel_rank_tol scales the largest singular value to get the rank cutoff;
/// the default 0 selects max(rows, cols) * machine epsilon per matrix,
/// the usual safe choice for dense double precision.
/// abs_check_tol is the slack used for symmetry/PSD/idempotency assertions.
struct Tolerance {
  double rel_rank_tol = 0.0;
  double abs_check_tol = 1e-8;

  /// Effective relative cutoff for a rows-by-cols matrix (always > 0).
  double rank_scale(Index rows, Index cols) const {
    if (rel_rank_tol > 0.0) return rel_rank_tol;
    return static_cast<double>(std::max(rows, cols)) *
           std::numeric_limits<double>::epsilon();
  }

  void validate() const {
    if (rel_rank_tol < 0.0) throw InvalidInputError("rel_rank_tol must be >= 0");
    if (abs_check_tol <= 0.0) throw InvalidInputError("abs_check_tol must be > 0");
  }
};

/// Threshold on cos(phi_GU) below which a problem counts as infeasible.
/// Strict positivity is meaningless in floating point without a cutoff.
inline constexpr double kFeasibleCosCutoff = 1e-10;

}  // namespace oblique
