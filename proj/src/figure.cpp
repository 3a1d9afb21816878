#include "oblique/figure.hpp"

#include "oblique/diagnostics.hpp"
#include "oblique/linalg.hpp"
#include "oblique/problem_io.hpp"

#include <cmath>
#include <numbers>

namespace oblique {

FigureData make_figure(const SamplingProblem& p, const Vector& center,
                       int samples, const Tolerance& tol) {
  p.validate();
  if (p.sampling.ambient_dim != 2)
    throw UnsupportedError("figure: ambient dimension must be 2");
  if (p.reconstruction.size() != 1)
    throw UnsupportedError("figure: needs a single reconstruction vector");
  if (p.sampling.size() < 2)
    throw UnsupportedError("figure: needs at least two sampling vectors");
  if (center.size() != 2) throw InvalidInputError("figure: center must be 2-D");
  if (samples < 3) throw InvalidInputError("figure: needs at least 3 samples");

  const Matrix synth_u = synthesis(p.sampling);
  if (linalg::num_rank(synth_u, tol) < 2)
    throw UnsupportedError("figure: sampling frame is rank deficient, ellipse degenerate");

  // |U^T (p - x)| = 1 pulled back through the frame operator square root.
  const Matrix shape = linalg::psd_sqrt_pinv(synth_u * synth_u.transpose(), tol);

  FigureData fig;
  fig.center = center;
  fig.ellipse_boundary.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const Eigen::Vector2d direction(std::cos(theta), std::sin(theta));
    fig.ellipse_boundary.push_back(center - shape * direction);
  }

  const Eigen::Vector2d g_dir =
      p.reconstruction.vectors.front().normalized();
  fig.g_direction = g_dir;

  const ReconstructionOperator fis = build_frame_independent(p, tol);
  const ReconstructionOperator gs = build_generalized(p, tol);
  fig.eta_fis = eta_of(fis);
  fig.eta_gs = eta_of(gs);

  const Eigen::Vector2d center_fis = fis.projection * center;
  const Eigen::Vector2d center_gs = gs.projection * center;
  fig.segment_fis = {center_fis + fig.eta_fis * g_dir, center_fis - fig.eta_fis * g_dir};
  fig.segment_gs = {center_gs + fig.eta_gs * g_dir, center_gs - fig.eta_gs * g_dir};
  return fig;
}

std::string figure_to_csv(const FigureData& fig) {
  std::string csv = "kind,theta,x,y\n";
  const auto point_row = [&csv](const char* kind, const std::string& theta,
                                const Eigen::Vector2d& pt) {
    csv += kind;
    csv += ',';
    csv += theta;
    csv += ',';
    csv += format_double(pt.x());
    csv += ',';
    csv += format_double(pt.y());
    csv += '\n';
  };

  const int samples = static_cast<int>(fig.ellipse_boundary.size());
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    point_row("ellipse", format_double(theta), fig.ellipse_boundary[static_cast<std::size_t>(k)]);
  }
  point_row("center", "", fig.center);
  point_row("segment_fis", "", fig.segment_fis[0]);
  point_row("segment_fis", "", fig.segment_fis[1]);
  point_row("segment_gs", "", fig.segment_gs[0]);
  point_row("segment_gs", "", fig.segment_gs[1]);
  point_row("g_direction", "", fig.g_direction);
  return csv;
}

}  // namespace oblique
