#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgldyadic/check_result.hpp"

namespace lgldyadic {

inline constexpr int kReportSchemaVersion = 1;

enum class PropertyKind {
  quasi_uniform,
  mq,
  str,
  displacement,
  equivalence,
  graded,
  nested,
  stretch_closed,
  convexity_condition,
  length_bounds,
  angle_bounds,
  limit_gap,
  cardinality,
  monotone_symmetric,
  interlacing,
  node_residual,
};

enum class Verdict { holds, fails, reported };

std::string_view to_string(PropertyKind kind);
std::string_view to_string(Verdict verdict);
/// std::invalid_argument on an unknown name.
PropertyKind property_kind_from_string(std::string_view name);
Verdict verdict_from_string(std::string_view name);

/// One property evaluated on one configuration.
struct PropertyReport {
  PropertyKind property = PropertyKind::quasi_uniform;
  /// What was examined: "lgl", "cgl", "nested_dyadic", "standalone_dyadic", ...
  std::string subject;
  int degree = 0;
  /// Second order for properties comparing two grids.
  std::optional<int> degree2;
  std::optional<double> alpha;
  Verdict verdict = Verdict::holds;
  /// Whether a failure counts against the campaign. Empirical envelopes and
  /// open statements are recorded with asserted = false.
  bool asserted = true;
  std::map<std::string, double> realized_constants;
  std::optional<Witness> witness;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Sort key used for deterministic output.
bool report_less(const PropertyReport& x, const PropertyReport& y);

/// Shortest decimal that reads back to the same double.
std::string format_number(double value);

/// Header plus one row per report. Requires a single property kind
/// (std::domain_error otherwise); an empty list gives the header only.
/// Throws std::invalid_argument for a failing report without a witness or a
/// non-finite constant.
std::string to_csv(const std::vector<PropertyReport>& reports);

/// {"schema_version": 1, "reports": [...]}. Same refusals as to_csv.
std::string to_json(const std::vector<PropertyReport>& reports);

/// Inverse of to_json. std::invalid_argument on malformed input.
std::vector<PropertyReport> reports_from_json(std::string_view text);

}  // namespace lgldyadic
