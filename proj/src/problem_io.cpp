#include "oblique/problem_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace oblique {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Vector parse_vector(const json& node, const char* field, Index expected_len) {
  if (!node.is_array())
    throw InvalidInputError(std::string(field) + ": expected an array of numbers");
  Vector v(static_cast<Index>(node.size()));
  Index i = 0;
  for (const auto& entry : node) {
    if (!entry.is_number())
      throw InvalidInputError(std::string(field) + ": entry " +
                              std::to_string(i) + " is not a number");
    v(i++) = entry.get<double>();
  }
  if (expected_len >= 0 && v.size() != expected_len)
    throw InvalidInputError(std::string(field) + ": expected length " +
                            std::to_string(expected_len) + ", got " +
                            std::to_string(v.size()));
  return v;
}

std::vector<Vector> parse_vector_list(const json& node, const char* field,
                                      Index ambient_dim) {
  if (!node.is_array() || node.empty())
    throw InvalidInputError(std::string(field) + ": expected a nonempty array of vectors");
  std::vector<Vector> out;
  out.reserve(node.size());
  Index i = 0;
  for (const auto& entry : node) {
    const std::string label = std::string(field) + "[" + std::to_string(i++) + "]";
    out.push_back(parse_vector(entry, label.c_str(), ambient_dim));
  }
  return out;
}

ordered_json array_of(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

void append_csv_row(std::string& csv, const std::string& key, const std::string& value) {
  csv += key;
  csv += ',';
  csv += value;
  csv += '\n';
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) throw InvalidInputError("problem file: expected a JSON object");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
    throw InvalidInputError("ambient_dim: missing or not an integer");
  const Index n = doc["ambient_dim"].get<Index>();
  if (n < 1) throw InvalidInputError("ambient_dim: must be >= 1");

  if (!doc.contains("sampling_vectors"))
    throw InvalidInputError("sampling_vectors: missing");
  if (!doc.contains("reconstruction_vectors"))
    throw InvalidInputError("reconstruction_vectors: missing");

  ProblemFile pf;
  FrameSequence sampling(n, parse_vector_list(doc["sampling_vectors"],
                                              "sampling_vectors", n));
  FrameSequence reconstruction(n, parse_vector_list(doc["reconstruction_vectors"],
                                                    "reconstruction_vectors", n));
  pf.problem = SamplingProblem(std::move(sampling), std::move(reconstruction));

  if (doc.contains("signal"))
    pf.signal = parse_vector(doc["signal"], "signal", n);
  if (doc.contains("noise"))
    pf.noise = parse_vector(doc["noise"], "noise", pf.problem.sampling.size());

  if (doc.contains("tolerance")) {
    const json& t = doc["tolerance"];
    if (!t.is_object()) throw InvalidInputError("tolerance: expected an object");
    Tolerance tol;
    if (t.contains("rel_rank_tol")) {
      if (!t["rel_rank_tol"].is_number())
        throw InvalidInputError("tolerance.rel_rank_tol: not a number");
      tol.rel_rank_tol = t["rel_rank_tol"].get<double>();
    }
    if (t.contains("abs_check_tol")) {
      if (!t["abs_check_tol"].is_number())
        throw InvalidInputError("tolerance.abs_check_tol: not a number");
      tol.abs_check_tol = t["abs_check_tol"].get<double>();
    }
    tol.validate();
    pf.tolerance = tol;
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open problem file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ordered_json problem_to_json(const ProblemFile& pf) {
  ordered_json doc;
  doc["ambient_dim"] = pf.problem.sampling.ambient_dim;
  ordered_json su = ordered_json::array();
  for (const Vector& v : pf.problem.sampling.vectors) su.push_back(array_of(v));
  doc["sampling_vectors"] = std::move(su);
  ordered_json sg = ordered_json::array();
  for (const Vector& v : pf.problem.reconstruction.vectors) sg.push_back(array_of(v));
  doc["reconstruction_vectors"] = std::move(sg);
  if (pf.signal) doc["signal"] = array_of(*pf.signal);
  if (pf.noise) doc["noise"] = array_of(*pf.noise);
  if (pf.tolerance) {
    doc["tolerance"] = {{"rel_rank_tol", pf.tolerance->rel_rank_tol},
                        {"abs_check_tol", pf.tolerance->abs_check_tol}};
  }
  return doc;
}

ordered_json report_to_json(const DiagnosticsReport& report) {
  ordered_json doc;
  doc["feasible"] = report.feasible;
  doc["cos_phi"] = report.cos_phi;
  if (report.mu_fis) doc["mu_fis"] = *report.mu_fis;
  if (report.mu_gs) doc["mu_gs"] = *report.mu_gs;
  if (report.eta_fis) doc["eta_fis"] = *report.eta_fis;
  if (report.eta_gs) doc["eta_gs"] = *report.eta_gs;
  if (report.kappa_reconstruction)
    doc["kappa_reconstruction"] = *report.kappa_reconstruction;
  if (report.kappa_weighted) doc["kappa_weighted"] = *report.kappa_weighted;
  doc["sampling_bounds"] = {{"lower", report.sampling_bounds.lower},
                            {"upper", report.sampling_bounds.upper}};
  doc["reconstruction_bounds"] = {{"lower", report.reconstruction_bounds.lower},
                                  {"upper", report.reconstruction_bounds.upper}};
  doc["coincide_dim"] = report.coincide_dim;
  doc["coincide_tight"] = report.coincide_tight;
  if (report.first_violation) doc["first_violation"] = *report.first_violation;
  return doc;
}

std::string report_to_csv(const DiagnosticsReport& report) {
  std::string csv = "quantity,value\n";
  append_csv_row(csv, "feasible", report.feasible ? "true" : "false");
  append_csv_row(csv, "cos_phi", format_double(report.cos_phi));
  if (report.mu_fis) append_csv_row(csv, "mu_fis", format_double(*report.mu_fis));
  if (report.mu_gs) append_csv_row(csv, "mu_gs", format_double(*report.mu_gs));
  if (report.eta_fis) append_csv_row(csv, "eta_fis", format_double(*report.eta_fis));
  if (report.eta_gs) append_csv_row(csv, "eta_gs", format_double(*report.eta_gs));
  if (report.kappa_reconstruction)
    append_csv_row(csv, "kappa_reconstruction", format_double(*report.kappa_reconstruction));
  if (report.kappa_weighted)
    append_csv_row(csv, "kappa_weighted", format_double(*report.kappa_weighted));
  append_csv_row(csv, "sampling_bound_lower", format_double(report.sampling_bounds.lower));
  append_csv_row(csv, "sampling_bound_upper", format_double(report.sampling_bounds.upper));
  append_csv_row(csv, "reconstruction_bound_lower",
                 format_double(report.reconstruction_bounds.lower));
  append_csv_row(csv, "reconstruction_bound_upper",
                 format_double(report.reconstruction_bounds.upper));
  append_csv_row(csv, "coincide_dim", report.coincide_dim ? "true" : "false");
  append_csv_row(csv, "coincide_tight", report.coincide_tight ? "true" : "false");
  if (report.first_violation)
    append_csv_row(csv, "first_violation", *report.first_violation);
  return csv;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace oblique
