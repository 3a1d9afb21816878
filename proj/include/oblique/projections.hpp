#pragma once

#include "oblique/frames.hpp"
#include "oblique/types.hpp"

namespace oblique {

/// Which oblique projection a ReconstructionOperator realizes.
enum class Method { generalized, frame_independent, consistent };

const char* method_name(Method m);

/// A pair of frame sequences in a common ambient space: measurements are
/// taken against the sampling frame, reconstructions live in the span of
/// the reconstruction frame.
struct SamplingProblem {
  FrameSequence sampling;        // frame of the sampling space U
  FrameSequence reconstruction;  // frame of the reconstruction space G

  SamplingProblem() = default;
  SamplingProblem(FrameSequence u, FrameSequence g);
  void validate() const;
};

/// Inner products of a signal against the sampling frame, one per vector.
struct Measurements {
  Vector values;
};

/// A built reconstruction: measurement-to-signal map Q, the induced
/// projection P = Q * synthesis(U)^T, and the measurement-to-coefficient map
/// whose output are minimal-norm least-squares coefficients in the
/// reconstruction frame.
struct ReconstructionOperator {
  Method method = Method::generalized;
  Matrix measurement_to_signal;  // Q, n x m
  Matrix projection;             // P = Q * U^T, n x n
  Matrix coeff_map;              // |G| x m
};

/// True iff cos(phi_GU) clears the feasibility cutoff. When the
/// reconstruction frame is Riesz this is equivalent to injectivity of
/// U^T * G; never throws.
bool check_feasible(const SamplingProblem& p, const Tolerance& tol = {});

/// Oblique projection onto span(G) along S(G)^perp:
/// coeff_map = pinv(U^T G), Q = G * coeff_map, P = Q * U^T.
ReconstructionOperator build_generalized(const SamplingProblem& p,
                                         const Tolerance& tol = {});

/// Oblique projection onto span(G) along P_U(G)^perp, depending only on the
/// spans: with W = psd_sqrt_pinv(U^T U), coeff_map = pinv(W U^T G) * W.
ReconstructionOperator build_frame_independent(const SamplingProblem& p,
                                               const Tolerance& tol = {});

/// Consistent reconstruction (interpolates every measurement). Requires
/// dim span(U) = dim span(G); equals the generalized operator re-tagged.
ReconstructionOperator build_consistent(const SamplingProblem& p,
                                        const Tolerance& tol = {});

/// Measurements of f against the sampling frame: values_j = <f, u_j>.
Measurements measure(const SamplingProblem& p, const Vector& f);

struct Reconstruction {
  Vector signal;        // G * coefficients = Q * b
  Vector coefficients;  // minimal-norm least-squares coefficients
};

Reconstruction reconstruct(const ReconstructionOperator& op, const Measurements& b);

/// max_k |<P_U (P f - f), g_k>| with P_U the orthogonal projector onto
/// span(U). Zero (up to roundoff) characterizes the frame-independent method.
double consistency_residual(const ReconstructionOperator& op,
                            const SamplingProblem& p, const Vector& f,
                            const Tolerance& tol = {});

}  // namespace oblique
