#pragma once

#include "oblique/frames.hpp"
#include "oblique/projections.hpp"
#include "oblique/types.hpp"

#include <optional>
#include <string>

namespace oblique {

/// Condition numbers of the two least-squares systems behind the builders:
/// the reconstruction synthesis matrix G itself, and the weighted matrix
/// (U^T U)^{dagger/2} U^T G solved by the frame-independent method. Both use
/// nonzero singular values only, so rank-deficient frames are admissible.
struct ConditionNumbers {
  double reconstruction = 1.0;  // kappa(G)
  double weighted = 1.0;        // kappa((U^T U)^{dagger/2} U^T G)
};

/// Every stability and quasi-optimality quantity of a sampling problem.
/// mu/eta/kappa fields are absent when the problem is infeasible.
struct DiagnosticsReport {
  double cos_phi = 0.0;
  bool feasible = false;

  std::optional<double> mu_fis;
  std::optional<double> mu_gs;
  std::optional<double> eta_fis;
  std::optional<double> eta_gs;
  std::optional<double> kappa_reconstruction;
  std::optional<double> kappa_weighted;

  FrameBounds sampling_bounds;        // A, B of the sampling frame
  FrameBounds reconstruction_bounds;  // C, D of the reconstruction frame

  bool coincide_dim = false;    // dim span(U) == dim span(G)
  bool coincide_tight = false;  // sampling frame is tight

  /// First violated report inequality, absent when all hold.
  std::optional<std::string> first_violation;
};

/// cos(phi_GU). For a Riesz reconstruction frame this is
/// sqrt(lambda_min((G^T G)^{-1/2} G^T P_U G (G^T G)^{-1/2})); otherwise it
/// falls back to the principal-angle oracle. Both routes agree when both apply.
double angle_cos(const SamplingProblem& p, const Tolerance& tol = {});

/// Stability constant eta = |Q|, the operator norm of the
/// measurement-to-signal map.
double eta_of(const ReconstructionOperator& op);

/// Quasi-optimality constant mu = |P| of the induced projection (the sharp
/// constant in |f - Pf| <= mu * dist(f, span G)). For the frame-independent
/// method this equals 1/cos(phi_GU), which is verified internally.
double mu_of(const ReconstructionOperator& op, const SamplingProblem& p,
             const Tolerance& tol = {});

/// Condition numbers with internal verification of the norm sandwiches the
/// weighted system satisfies relative to G. Throws FeasibilityError on an
/// infeasible problem and NumericalError if a sandwich fails its slack.
ConditionNumbers kappa_of(const SamplingProblem& p, const Tolerance& tol = {});

/// Noise-robust reconstruction error bound:
/// dist_to_G * sqrt(mu^2 - 1) + noise_norm * eta.
double error_bound(double mu, double eta, double dist_to_G, double noise_norm);

/// Computes every report field for a problem. Infeasible problems yield
/// feasible = false with mu/eta/kappa absent rather than an error.
DiagnosticsReport full_report(const SamplingProblem& p, const Tolerance& tol = {});

}  // namespace oblique
