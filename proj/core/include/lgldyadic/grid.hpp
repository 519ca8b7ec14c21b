#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lgldyadic/check_result.hpp"
#include "lgldyadic/interval.hpp"

namespace lgldyadic {

/// Additive tolerance, relative to the base length, for length comparisons.
inline constexpr double kLengthTolerance = 1e-12;
/// Additive tolerance, relative to the base length, for node symmetry.
inline constexpr double kSymmetryTolerance = 1e-13;

/// Strictly increasing nodes x_0 = a < ... < x_N = b and the partition they induce.
///
/// Cell lengths are stored alongside the nodes. Grids built from closed-form
/// or angle data pass lengths that are more accurate than node differences;
/// otherwise the lengths are the differences.
class Grid {
 public:
  explicit Grid(std::vector<double> nodes);
  Grid(Interval interval, std::vector<double> nodes);
  Grid(Interval interval, std::vector<double> nodes, std::vector<double> lengths);

  const Interval& interval() const { return interval_; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> lengths() const { return lengths_; }
  int cell_count() const { return static_cast<int>(lengths_.size()); }
  Interval cell(int j) const { return {nodes_[j], nodes_[j + 1]}; }

 private:
  void validate() const;

  Interval interval_;
  std::vector<double> nodes_;
  std::vector<double> lengths_;
};

/// The closed cells [x_j, x_{j+1}] in order.
std::vector<Interval> partition(const Grid& grid);

/// Index range [first, last] of the cells meeting the closed interval `piece`.
std::pair<int, int> overlapping_cells(const Grid& grid, const Interval& piece);

/// Smallest C with C^-1 <= |D|/|D'| <= C over adjacent cells; 1 for a single cell.
double check_quasi_uniform(const Grid& grid);

struct EquivalenceReport {
  double min_ratio = 1.0;
  double max_ratio = 1.0;
  /// (cell in first grid, cell in second grid) attaining each extremum.
  std::pair<int, int> witness_min{0, 0};
  std::pair<int, int> witness_max{0, 0};

  bool holds_for(double lower, double upper) const {
    return lower <= min_ratio && max_ratio <= upper;
  }
};

/// Extremal |D|/|D'| over all overlapping pairs D in `first`, D' in `second`.
/// Linear merged sweep. Throws std::domain_error if the base intervals differ.
EquivalenceReport check_equivalence(const Grid& first, const Grid& second);

/// x -> 2x - a applied to a subinterval of the left half of `base`.
Interval stretch(const Interval& piece, const Interval& base = kReferenceInterval);

/// Which cells count as lying in (a, a + (b-a)/4].
enum class StrBoundary {
  include_boundary_interval,  // the cell starting at a takes part as well
  strict,                     // only cells with left endpoint > a
};

/// Stretching comparison: every cell I in the first quarter is stretched and
/// each cell meeting L(I) must be no longer than L(I).
/// With the boundary cell included this fails for every LGL grid of order
/// >= 5, since the second cell is more than twice the first.
/// On failure the witness holds (I, I') as indices and intervals.
/// `realized` is the smallest |L(I)| - |I'| seen (0 if no cell qualifies).
/// Throws std::domain_error for an asymmetric grid.
CheckResult check_str(const Grid& grid, StrBoundary mode = StrBoundary::strict);

bool is_symmetric(const Grid& grid);

/// Symmetric about the midpoint and non-decreasing cell lengths from a
/// towards the midpoint among cells inside the left half.
bool check_monotone_symmetric(const Grid& grid);

}  // namespace lgldyadic
