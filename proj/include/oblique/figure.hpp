#pragma once

#include "oblique/projections.hpp"
#include "oblique/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace oblique {

/// Geometry of the planar measurement-uncertainty picture: the ellipse of
/// signals indistinguishable from the center p at unit measurement noise,
/// its images under the two reconstructions (segments on the reconstruction
/// line whose half-lengths are the eta values), and the line direction.
struct FigureData {
  std::vector<Eigen::Vector2d> ellipse_boundary;
  Eigen::Vector2d center;
  std::array<Eigen::Vector2d, 2> segment_fis;
  std::array<Eigen::Vector2d, 2> segment_gs;
  Eigen::Vector2d g_direction;
  double eta_fis = 0.0;
  double eta_gs = 0.0;
};

/// Builds the figure for a 2-D problem with a rank-2 sampling frame, a single
/// reconstruction vector, and center signal p. Boundary points are
/// x(theta) = p - (U U^T)^{-1/2} (cos theta, sin theta), which satisfy
/// |U^T (p - x)| = 1 exactly; segment endpoints are P p +- eta * g_hat.
FigureData make_figure(const SamplingProblem& p, const Vector& center,
                       int samples, const Tolerance& tol = {});

/// CSV with one point per row: kind,theta,x,y (theta empty for non-boundary
/// rows).
std::string figure_to_csv(const FigureData& fig);

}  // namespace oblique
