#pragma once

#include "oblique/diagnostics.hpp"
#include "oblique/projections.hpp"
#include "oblique/types.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace oblique {

/// On-disk description of a sampling problem: ambient dimension, the two
/// vector lists, and optionally a signal, per-measurement noise, and
/// tolerance overrides.
struct ProblemFile {
  SamplingProblem problem;
  std::optional<Vector> signal;
  std::optional<Vector> noise;
  std::optional<Tolerance> tolerance;
};

/// Parses a problem document, validating shapes. Throws InvalidInputError
/// with a field-level message on malformed input.
ProblemFile parse_problem(const nlohmann::json& doc);

/// Reads and parses a problem file from disk.
ProblemFile load_problem(const std::string& path);

nlohmann::ordered_json problem_to_json(const ProblemFile& pf);

nlohmann::ordered_json report_to_json(const DiagnosticsReport& report);

/// One row per quantity, "quantity,value" header; absent fields are omitted.
std::string report_to_csv(const DiagnosticsReport& report);

/// Formats a double with enough digits to round-trip exactly.
std::string format_double(double value);

}  // namespace oblique
