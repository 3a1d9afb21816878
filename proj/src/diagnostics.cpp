#include "oblique/diagnostics.hpp"

#include "oblique/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace oblique {

namespace {

double pseudo_condition(const Matrix& m, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sigma = svd.singularValues();
  const double cutoff = tol.rank_scale(m.rows(), m.cols()) * sigma(0);
  double smin = sigma(0);
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff && sigma(i) < smin) smin = sigma(i);
  if (smin <= 0.0) throw InvalidInputError("condition number of a zero matrix");
  return sigma(0) / smin;
}

// Checks the two-sided norm sandwiches of the weighted system on a fixed set
// of coefficient directions; failures indicate broken numerics, not bad input.
void verify_weighted_sandwiches(const Matrix& synth_g, const Matrix& weighted,
                                double cos_phi, const FrameBounds& g_bounds,
                                const Tolerance& tol) {
  std::mt19937_64 rng(0x5eedbeefULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Matrix coeff_row_proj = linalg::orth_proj(synth_g.transpose(), tol);

  for (int trial = 0; trial < 32; ++trial) {
    Vector c(synth_g.cols());
    for (Index i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    c.normalize();

    const double lhs = (weighted * c).norm();
    const double g_norm = (synth_g * c).norm();
    const double slack = tol.abs_check_tol * (1.0 + g_norm);
    if (lhs < cos_phi * g_norm - slack || lhs > g_norm + slack)
      throw NumericalError("weighted system violates the |Gc| sandwich");

    // Frame-bound sandwich on the row space of G (the complement of its kernel).
    const Vector c2 = coeff_row_proj * c;
    const double n2 = c2.norm();
    if (n2 < 1e-12) continue;
    const double lhs2 = (weighted * c2).norm();
    const double slack2 = tol.abs_check_tol * (1.0 + n2);
    if (lhs2 < std::sqrt(g_bounds.lower) * cos_phi * n2 - slack2 ||
        lhs2 > std::sqrt(g_bounds.upper) * n2 + slack2)
      throw NumericalError("weighted system violates the frame-bound sandwich");
  }
}

std::optional<std::string> first_report_violation(const DiagnosticsReport& r) {
  const double slack = 1e-8;
  std::ostringstream msg;
  const double a = r.sampling_bounds.lower;
  const double b = r.sampling_bounds.upper;

  if (r.eta_fis && (*r.eta_fis < 1.0 / std::sqrt(b) - slack ||
                    *r.eta_fis > 1.0 / (std::sqrt(a) * r.cos_phi) + slack)) {
    msg << "eta_fis=" << *r.eta_fis << " outside [1/sqrt(B), 1/(sqrt(A) cos phi)]";
    return msg.str();
  }
  if (r.mu_fis && std::abs(*r.mu_fis - 1.0 / r.cos_phi) > slack) {
    msg << "mu_fis=" << *r.mu_fis << " differs from 1/cos(phi)=" << 1.0 / r.cos_phi;
    return msg.str();
  }
  if (r.mu_gs && (*r.mu_gs < 1.0 - slack ||
                  *r.mu_gs > std::sqrt(b / a) / r.cos_phi + slack)) {
    msg << "mu_gs=" << *r.mu_gs << " outside [1, sqrt(B/A)/cos phi]";
    return msg.str();
  }
  if (r.kappa_reconstruction && r.kappa_weighted &&
      (*r.kappa_weighted < r.cos_phi * *r.kappa_reconstruction - slack ||
       *r.kappa_weighted > *r.kappa_reconstruction / r.cos_phi + slack)) {
    msg << "kappa_weighted=" << *r.kappa_weighted
        << " outside the cos-phi sandwich of kappa_G=" << *r.kappa_reconstruction;
    return msg.str();
  }
  if (r.mu_fis && r.mu_gs && *r.mu_fis > *r.mu_gs + slack) {
    msg << "mu_fis=" << *r.mu_fis << " exceeds mu_gs=" << *r.mu_gs;
    return msg.str();
  }
  if (r.eta_fis && r.eta_gs && *r.eta_gs > *r.eta_fis + slack) {
    msg << "eta_gs=" << *r.eta_gs << " exceeds eta_fis=" << *r.eta_fis;
    return msg.str();
  }
  return std::nullopt;
}

}  // namespace

double angle_cos(const SamplingProblem& p, const Tolerance& tol) {
  tol.validate();
  p.validate();
  const Matrix synth_u = synthesis(p.sampling);
  const Matrix synth_g = synthesis(p.reconstruction);

  if (!is_riesz(p.reconstruction, tol))
    return linalg::principal_angle_cos_oracle(synth_g, synth_u, tol);

  // cos^2(phi_GU) = lambda_min((G^T G)^{-1/2} G^T U U^dagger G (G^T G)^{-1/2})
  const Matrix gram_root = linalg::psd_sqrt_pinv(synth_g.transpose() * synth_g, tol);
  const Matrix proj_u = linalg::orth_proj(synth_u, tol);
  Matrix form = gram_root * synth_g.transpose() * proj_u * synth_g * gram_root;
  form = 0.5 * (form + form.transpose());
  const double lambda_min =
      Eigen::SelfAdjointEigenSolver<Matrix>(form).eigenvalues().minCoeff();
  return std::sqrt(std::clamp(lambda_min, 0.0, 1.0));
}

double eta_of(const ReconstructionOperator& op) {
  return linalg::op_norm(op.measurement_to_signal);
}

double mu_of(const ReconstructionOperator& op, const SamplingProblem& p,
             const Tolerance& tol) {
  const Matrix& proj = op.projection;
  const double scale = std::max(1.0, linalg::op_norm(proj));
  if ((proj * proj - proj).cwiseAbs().maxCoeff() > tol.abs_check_tol * scale)
    throw InvalidInputError("mu_of: operator projection is not idempotent");
  const Matrix proj_g = linalg::orth_proj(synthesis(p.reconstruction), tol);
  if ((proj_g * proj - proj).cwiseAbs().maxCoeff() > tol.abs_check_tol * scale)
    throw InvalidInputError("mu_of: projection range is not span(G)");

  const double mu = linalg::op_norm(proj);
  if (op.method == Method::frame_independent) {
    const double expected = 1.0 / angle_cos(p, tol);
    if (std::abs(mu - expected) > 1e-8)
      throw NumericalError("mu_of: |P| disagrees with 1/cos(phi_GU)");
  }
  return mu;
}

ConditionNumbers kappa_of(const SamplingProblem& p, const Tolerance& tol) {
  tol.validate();
  const double cos_phi = angle_cos(p, tol);
  if (cos_phi <= kFeasibleCosCutoff)
    throw FeasibilityError("kappa_of: infeasible problem");

  const Matrix synth_u = synthesis(p.sampling);
  const Matrix synth_g = synthesis(p.reconstruction);
  const Matrix weight = linalg::psd_sqrt_pinv(synth_u.transpose() * synth_u, tol);
  const Matrix weighted = weight * synth_u.transpose() * synth_g;

  ConditionNumbers kappa;
  kappa.reconstruction = pseudo_condition(synth_g, tol);
  kappa.weighted = pseudo_condition(weighted, tol);

  verify_weighted_sandwiches(synth_g, weighted, cos_phi,
                             frame_bounds(p.reconstruction, tol), tol);
  return kappa;
}

double error_bound(double mu, double eta, double dist_to_G, double noise_norm) {
  // A hair below 1 is roundoff from |P| of an orthogonal projection.
  if (mu < 1.0 - 1e-12) throw InvalidInputError("error_bound: mu must be >= 1");
  mu = std::max(mu, 1.0);
  if (eta <= 0.0) throw InvalidInputError("error_bound: eta must be > 0");
  if (dist_to_G < 0.0 || noise_norm < 0.0)
    throw InvalidInputError("error_bound: norms must be nonnegative");
  return dist_to_G * std::sqrt(mu * mu - 1.0) + noise_norm * eta;
}

DiagnosticsReport full_report(const SamplingProblem& p, const Tolerance& tol) {
  tol.validate();
  p.validate();

  DiagnosticsReport report;
  report.cos_phi = angle_cos(p, tol);
  report.sampling_bounds = frame_bounds(p.sampling, tol);
  report.reconstruction_bounds = frame_bounds(p.reconstruction, tol);

  const Matrix synth_u = synthesis(p.sampling);
  const Matrix synth_g = synthesis(p.reconstruction);
  report.coincide_dim =
      linalg::num_rank(synth_u, tol) == linalg::num_rank(synth_g, tol);
  report.coincide_tight =
      report.sampling_bounds.upper - report.sampling_bounds.lower <=
      tol.abs_check_tol * report.sampling_bounds.upper;

  report.feasible = check_feasible(p, tol);
  if (!report.feasible) return report;

  const ReconstructionOperator gs = build_generalized(p, tol);
  const ReconstructionOperator fis = build_frame_independent(p, tol);
  report.mu_gs = mu_of(gs, p, tol);
  report.mu_fis = mu_of(fis, p, tol);
  report.eta_gs = eta_of(gs);
  report.eta_fis = eta_of(fis);

  const ConditionNumbers kappa = kappa_of(p, tol);
  report.kappa_reconstruction = kappa.reconstruction;
  report.kappa_weighted = kappa.weighted;

  report.first_violation = first_report_violation(report);
  return report;
}

}  // namespace oblique
