#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgldyadic/grid.hpp"
#include "lgldyadic/interval.hpp"
#include "lgldyadic/report.hpp"

namespace lgldyadic {

/// What a verification campaign can be asked to run. Most map one-to-one
/// onto a report kind; nested_standalone compares the fresh-start grids of
/// consecutive orders and is recorded but never asserted.
enum class Selector {
  quasi_uniform,
  mq,
  str,
  displacement,
  equivalence,
  graded,
  nested,
  nested_standalone,
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

std::string_view to_string(Selector selector);
/// Comma-separated names, or "all". std::invalid_argument on unknown names.
std::vector<Selector> parse_selectors(std::string_view list);
std::vector<Selector> all_selectors();

struct CampaignConfig {
  int max_degree = 500;
  std::vector<double> alphas{1.0, 1.25};
  std::vector<Selector> selectors = all_selectors();
  Interval interval = kReferenceInterval;
  StrBoundary str_boundary = StrBoundary::strict;
  /// Fill runtime_ms; off by default so repeated runs give identical bytes.
  bool timings = false;
  /// 0: take LGL_DYADIC_THREADS, else the hardware concurrency.
  int threads = 0;

  /// std::invalid_argument unless 2 <= max_degree <= 2000 and all alphas > 0.
  void validate() const;
};

/// Worker count for `requested` (see CampaignConfig::threads). At least 1.
int campaign_threads(int requested);

/// Runs every selected property over orders 2..max_degree and each alpha.
/// Reports come back sorted by report_less, independent of scheduling.
std::vector<PropertyReport> run_campaign(const CampaignConfig& config);

/// True iff no asserted report fails.
bool campaign_passes(const std::vector<PropertyReport>& reports);

/// One row of the grid-size comparison: node counts of the LGL grid, the
/// fresh-start dyadic grid and the nested family member at one order.
struct SizeRow {
  double alpha = 1.0;
  int order = 1;
  std::size_t lgl_nodes = 0;
  std::size_t standalone_nodes = 0;
  std::size_t nested_nodes = 0;

  friend bool operator==(const SizeRow&, const SizeRow&) = default;
};

/// Rows for orders 1..max_degree, grouped by alpha in the given order.
std::vector<SizeRow> compute_sizes(int max_degree, const std::vector<double>& alphas,
                                   Interval interval = kReferenceInterval, int threads = 0);

std::string sizes_to_csv(const std::vector<SizeRow>& rows);
std::string sizes_to_json(const std::vector<SizeRow>& rows);

}  // namespace lgldyadic
