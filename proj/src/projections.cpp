#include "oblique/projections.hpp"

#include "oblique/diagnostics.hpp"
#include "oblique/linalg.hpp"

#include <cmath>
#include <utility>

namespace oblique {

namespace {

ReconstructionOperator assemble(Method method, const Matrix& synth_g,
                                const Matrix& synth_u, Matrix coeff_map) {
  ReconstructionOperator op;
  op.method = method;
  op.coeff_map = std::move(coeff_map);
  op.measurement_to_signal = synth_g * op.coeff_map;
  op.projection = op.measurement_to_signal * synth_u.transpose();

  const double scale = std::max(1.0, linalg::op_norm(op.projection));
  const double idem = (op.projection * op.projection - op.projection)
                          .cwiseAbs()
                          .maxCoeff();
  if (idem > 1e-8 * scale)
    throw NumericalError("reconstruction operator: projection is not idempotent");
  return op;
}

void require_feasible(const SamplingProblem& p, const Tolerance& tol) {
  if (!check_feasible(p, tol))
    throw FeasibilityError(
        "sampling problem is infeasible: cos(phi_GU) is numerically zero");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::generalized: return "generalized";
    case Method::frame_independent: return "frame_independent";
    case Method::consistent: return "consistent";
  }
  return "unknown";
}

SamplingProblem::SamplingProblem(FrameSequence u, FrameSequence g)
    : sampling(std::move(u)), reconstruction(std::move(g)) {
  validate();
}

void SamplingProblem::validate() const {
  sampling.validate();
  reconstruction.validate();
  if (sampling.ambient_dim != reconstruction.ambient_dim)
    throw InvalidInputError("SamplingProblem: ambient dimensions differ");
}

bool check_feasible(const SamplingProblem& p, const Tolerance& tol) {
  p.validate();
  const bool transversal = angle_cos(p, tol) > kFeasibleCosCutoff;
  if (!is_riesz(p.reconstruction, tol)) return transversal;
  // For a Riesz reconstruction frame, cos(phi_GU) > 0 iff U^T G is injective;
  // requiring both keeps boundary cases conservative.
  const Matrix cross =
      synthesis(p.sampling).transpose() * synthesis(p.reconstruction);
  const bool injective = linalg::num_rank(cross, tol) == p.reconstruction.size();
  return transversal && injective;
}

ReconstructionOperator build_generalized(const SamplingProblem& p,
                                         const Tolerance& tol) {
  require_feasible(p, tol);
  const Matrix synth_u = synthesis(p.sampling);
  const Matrix synth_g = synthesis(p.reconstruction);
  Matrix coeff_map = linalg::pinv(synth_u.transpose() * synth_g, tol);
  return assemble(Method::generalized, synth_g, synth_u, std::move(coeff_map));
}

ReconstructionOperator build_frame_independent(const SamplingProblem& p,
                                               const Tolerance& tol) {
  require_feasible(p, tol);
  const Matrix synth_u = synthesis(p.sampling);
  const Matrix synth_g = synthesis(p.reconstruction);
  const Matrix w = linalg::psd_sqrt_pinv(synth_u.transpose() * synth_u, tol);
  Matrix coeff_map =
      linalg::pinv(w * synth_u.transpose() * synth_g, tol) * w;
  return assemble(Method::frame_independent, synth_g, synth_u,
                  std::move(coeff_map));
}

ReconstructionOperator build_consistent(const SamplingProblem& p,
                                        const Tolerance& tol) {
  const Index dim_u = linalg::num_rank(synthesis(p.sampling), tol);
  const Index dim_g = linalg::num_rank(synthesis(p.reconstruction), tol);
  if (dim_u != dim_g)
    throw UnsupportedError(
        "consistent reconstruction needs dim span(U) = dim span(G)");
  ReconstructionOperator op = build_generalized(p, tol);
  op.method = Method::consistent;
  return op;
}

Measurements measure(const SamplingProblem& p, const Vector& f) {
  p.validate();
  if (f.size() != p.sampling.ambient_dim)
    throw InvalidInputError("measure: signal length differs from ambient dimension");
  if (!f.allFinite()) throw InvalidInputError("measure: non-finite signal");
  return Measurements{synthesis(p.sampling).transpose() * f};
}

Reconstruction reconstruct(const ReconstructionOperator& op, const Measurements& b) {
  if (b.values.size() != op.coeff_map.cols())
    throw InvalidInputError("reconstruct: measurement length differs from operator");
  if (!b.values.allFinite())
    throw InvalidInputError("reconstruct: non-finite measurements");
  Reconstruction r;
  r.coefficients = op.coeff_map * b.values;
  r.signal = op.measurement_to_signal * b.values;
  return r;
}

double consistency_residual(const ReconstructionOperator& op,
                            const SamplingProblem& p, const Vector& f,
                            const Tolerance& tol) {
  p.validate();
  if (f.size() != p.sampling.ambient_dim)
    throw InvalidInputError(
        "consistency_residual: signal length differs from ambient dimension");
  const Matrix proj_u = linalg::orth_proj(synthesis(p.sampling), tol);
  const Vector defect = proj_u * (op.projection * f - f);
  return (synthesis(p.reconstruction).transpose() * defect).cwiseAbs().maxCoeff();
}

}  // namespace oblique
