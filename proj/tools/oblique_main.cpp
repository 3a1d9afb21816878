#include "oblique/diagnostics.hpp"
#include "oblique/figure.hpp"
#include "oblique/linalg.hpp"
#include "oblique/problem_io.hpp"
#include "oblique/projections.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNumerical = 4;

using oblique::ProblemFile;
using oblique::Tolerance;
using oblique::Vector;

// Precedence: --tol flag, then the file's tolerance block, then OBLIQUE_TOL,
// then the built-in default.
Tolerance resolve_tolerance(const ProblemFile& pf, std::optional<double> tol_flag) {
  Tolerance tol;
  if (const char* env = std::getenv("OBLIQUE_TOL")) {
    try {
      tol.rel_rank_tol = std::stod(env);
    } catch (const std::exception&) {
      throw oblique::InvalidInputError("OBLIQUE_TOL is not a number");
    }
  }
  if (pf.tolerance) tol = *pf.tolerance;
  if (tol_flag) tol.rel_rank_tol = *tol_flag;
  tol.validate();
  return tol;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw oblique::InvalidInputError("cannot open output file: " + path);
  out << text;
  if (!out) throw oblique::InvalidInputError("failed writing output file: " + path);
}

int run_analyze(const std::string& input, const std::string& output,
                const std::string& format, std::optional<double> tol_flag) {
  const ProblemFile pf = oblique::load_problem(input);
  const Tolerance tol = resolve_tolerance(pf, tol_flag);
  const oblique::DiagnosticsReport report = oblique::full_report(pf.problem, tol);
  if (format == "csv")
    write_text(output, oblique::report_to_csv(report));
  else
    write_text(output, oblique::report_to_json(report).dump(2) + "\n");
  return kExitOk;
}

oblique::ReconstructionOperator build_for(const std::string& method,
                                          const oblique::SamplingProblem& p,
                                          const Tolerance& tol) {
  if (method == "gs") return oblique::build_generalized(p, tol);
  if (method == "fis") return oblique::build_frame_independent(p, tol);
  return oblique::build_consistent(p, tol);
}

int run_reconstruct(const std::string& input, const std::string& method,
                    const std::string& output, std::optional<double> tol_flag) {
  const ProblemFile pf = oblique::load_problem(input);
  const Tolerance tol = resolve_tolerance(pf, tol_flag);
  if (!pf.signal)
    throw oblique::InvalidInputError("reconstruct: problem file has no signal");
  const Vector& f = *pf.signal;

  const oblique::ReconstructionOperator op = build_for(method, pf.problem, tol);
  oblique::Measurements b = oblique::measure(pf.problem, f);
  const double noise_norm = pf.noise ? pf.noise->norm() : 0.0;
  if (pf.noise) b.values += *pf.noise;

  const oblique::Reconstruction rec = oblique::reconstruct(op, b);

  const oblique::Matrix synth_u = oblique::synthesis(pf.problem.sampling);
  const oblique::Matrix synth_g = oblique::synthesis(pf.problem.reconstruction);
  const double lsq_residual =
      (b.values - synth_u.transpose() * synth_g * rec.coefficients).norm();

  const oblique::Matrix proj_g = oblique::linalg::orth_proj(synth_g, tol);
  const Vector best_in_g = proj_g * f;
  const double dist_to_g = (f - best_in_g).norm();
  const double mu = oblique::mu_of(op, pf.problem, tol);
  const double eta = oblique::eta_of(op);

  nlohmann::ordered_json doc;
  doc["method"] = method;
  nlohmann::ordered_json sig = nlohmann::ordered_json::array();
  for (oblique::Index i = 0; i < rec.signal.size(); ++i) sig.push_back(rec.signal(i));
  doc["reconstructed_signal"] = std::move(sig);
  nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
  for (oblique::Index i = 0; i < rec.coefficients.size(); ++i)
    coeff.push_back(rec.coefficients(i));
  doc["coefficients"] = std::move(coeff);
  doc["lsq_residual"] = lsq_residual;
  doc["consistency_residual"] =
      oblique::consistency_residual(op, pf.problem, f, tol);
  doc["error_bound"] = oblique::error_bound(mu, eta, dist_to_g, noise_norm);
  doc["achieved_error"] = (best_in_g - rec.signal).norm();
  write_text(output, doc.dump(2) + "\n");
  return kExitOk;
}

int run_figure(const std::string& input, const std::string& output, int samples,
               std::optional<double> tol_flag) {
  const ProblemFile pf = oblique::load_problem(input);
  const Tolerance tol = resolve_tolerance(pf, tol_flag);
  if (!pf.signal)
    throw oblique::InvalidInputError("figure: problem file has no signal (center point)");
  const oblique::FigureData fig =
      oblique::make_figure(pf.problem, *pf.signal, samples, tol);
  write_text(output, oblique::figure_to_csv(fig));
  return kExitOk;
}

ProblemFile builtin_example(int index) {
  ProblemFile pf;
  oblique::FrameSequence sampling, reconstruction;
  sampling.ambient_dim = 2;
  reconstruction.ambient_dim = 2;
  if (index == 1)
    sampling.vectors = {Eigen::Vector2d(0.0, 1.0), Eigen::Vector2d(0.8, 1.0)};
  else
    sampling.vectors = {Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(1.0, 0.8)};
  reconstruction.vectors = {Eigen::Vector2d(1.0, 0.0)};
  pf.problem = oblique::SamplingProblem(sampling, reconstruction);
  pf.signal = Eigen::Vector2d(3.0, 5.0);
  return pf;
}

struct TableCell {
  const char* name;
  double got;
  double expected;
};

int run_paper_examples(const std::string& outdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec || !fs::is_directory(outdir))
    throw oblique::InvalidInputError("cannot create output directory: " + outdir);

  const double cell_tol = 0.01;
  bool all_pass = true;
  for (int index = 1; index <= 2; ++index) {
    const ProblemFile pf = builtin_example(index);
    const Tolerance tol;
    const std::string stem = outdir + "/example" + std::to_string(index);

    write_text(stem + "_problem.json",
               oblique::problem_to_json(pf).dump(2) + "\n");
    const oblique::DiagnosticsReport report = oblique::full_report(pf.problem, tol);
    write_text(stem + "_report.json",
               oblique::report_to_json(report).dump(2) + "\n");
    const oblique::FigureData fig =
        oblique::make_figure(pf.problem, *pf.signal, 512, tol);
    write_text(stem + "_figure.csv", oblique::figure_to_csv(fig));

    const TableCell cells[] = {
        {"eta_fis", report.eta_fis.value(), index == 1 ? 1.77 : 1.0},
        {"mu_fis", report.mu_fis.value(), 1.0},
        {"eta_gs", report.eta_gs.value(), index == 1 ? 1.25 : 0.71},
        {"mu_gs", report.mu_gs.value(), index == 1 ? 1.60 : 1.08},
    };
    for (const TableCell& cell : cells) {
      const bool ok = std::abs(cell.got - cell.expected) <= cell_tol;
      all_pass = all_pass && ok;
      std::cout << (ok ? "[PASS] " : "[FAIL] ") << "example" << index << " "
                << cell.name << " = " << oblique::format_double(cell.got)
                << " (expected " << oblique::format_double(cell.expected)
                << " +/- " << oblique::format_double(cell_tol) << ")\n";
    }
  }
  return all_pass ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling and reconstruction in different subspaces via oblique projections"};
  app.require_subcommand(1);

  std::string input, output, format = "json", method, outdir;
  int samples = 512;
  double tol_value = 0.0;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Compute the full diagnostics report for a problem file");
  analyze->add_option("--input", input, "problem file (JSON)")->required();
  analyze->add_option("--output", output, "output path (default stdout)");
  analyze->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::Option* analyze_tol =
      analyze->add_option("--tol", tol_value, "relative rank cutoff override");

  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Reconstruct the file's signal from its measurements");
  reconstruct->add_option("--input", input, "problem file (JSON)")->required();
  reconstruct->add_option("--method", method, "gs, fis, or consistent")
      ->required()
      ->check(CLI::IsMember({"gs", "fis", "consistent"}));
  reconstruct->add_option("--output", output, "output path (default stdout)");
  CLI::Option* reconstruct_tol =
      reconstruct->add_option("--tol", tol_value, "relative rank cutoff override");

  CLI::App* figure = app.add_subcommand(
      "figure", "Emit the planar uncertainty-ellipse figure data as CSV");
  figure->add_option("--input", input, "problem file (JSON)")->required();
  figure->add_option("--output", output, "output path (default stdout)");
  figure->add_option("--samples", samples, "boundary sample count")
      ->check(CLI::PositiveNumber);
  CLI::Option* figure_tol =
      figure->add_option("--tol", tol_value, "relative rank cutoff override");

  CLI::App* paper = app.add_subcommand(
      "paper-examples", "Write the two built-in planar examples and check their tables");
  paper->add_option("--output", outdir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) {
      std::optional<double> tol_flag;
      if (analyze_tol->count() > 0) tol_flag = tol_value;
      return run_analyze(input, output, format, tol_flag);
    }
    if (reconstruct->parsed()) {
      std::optional<double> tol_flag;
      if (reconstruct_tol->count() > 0) tol_flag = tol_value;
      return run_reconstruct(input, method, output, tol_flag);
    }
    if (figure->parsed()) {
      std::optional<double> tol_flag;
      if (figure_tol->count() > 0) tol_flag = tol_value;
      return run_figure(input, output, samples, tol_flag);
    }
    return run_paper_examples(outdir);
  } catch (const oblique::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const oblique::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const oblique::FeasibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const oblique::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
