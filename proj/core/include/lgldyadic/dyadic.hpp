#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lgldyadic/check_result.hpp"
#include "lgldyadic/grid.hpp"
#include "lgldyadic/interval.hpp"

namespace lgldyadic {

/// Deepest level representable: node positions are stored as integers
/// scaled by 2^kMaxDyadicLevel.
inline constexpr int kMaxDyadicLevel = 62;
inline constexpr std::uint64_t kDyadicKeyEnd = std::uint64_t{1} << kMaxDyadicLevel;

/// [a + (b-a) i 2^-j, a + (b-a) (i+1) 2^-j] for level j and index i.
struct DyadicInterval {
  int level = 0;
  std::int64_t index = 0;

  /// Position of the left end as a multiple of 2^-kMaxDyadicLevel.
  std::uint64_t left_key() const {
    return static_cast<std::uint64_t>(index) << (kMaxDyadicLevel - level);
  }
  std::uint64_t right_key() const {
    return static_cast<std::uint64_t>(index + 1) << (kMaxDyadicLevel - level);
  }
  DyadicInterval parent() const { return {level - 1, index / 2}; }
  DyadicInterval left_child() const { return {level + 1, 2 * index}; }
  DyadicInterval right_child() const { return {level + 1, 2 * index + 1}; }

  double length(const Interval& base) const;
  Interval realize(const Interval& base) const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

/// Maps an integer key to its point of `base`.
double realize_key(std::uint64_t key, const Interval& base);

/// Dyadic partition of a base interval. The leaves are kept sorted and tile
/// the base exactly; any such tiling is the leaf set of a full binary tree.
class DyadicGrid {
 public:
  /// The single cell [a, b].
  explicit DyadicGrid(Interval base = kReferenceInterval);
  /// Sorts the leaves and throws std::invalid_argument unless they tile the base.
  DyadicGrid(Interval base, std::vector<DyadicInterval> leaves);

  const Interval& base() const { return base_; }
  const std::vector<DyadicInterval>& leaves() const { return leaves_; }
  std::size_t node_count() const { return leaves_.size() + 1; }
  int max_level() const;

  /// Sorted node keys: left keys of the leaves plus kDyadicKeyEnd.
  std::vector<std::uint64_t> node_keys() const;
  std::vector<double> nodes() const;
  Grid to_grid() const;

  friend bool operator==(const DyadicGrid&, const DyadicGrid&) = default;

 private:
  Interval base_;
  std::vector<DyadicInterval> leaves_;
};

/// Indices of the longest and the shortest cell of `grid` meeting `piece`
/// (touching counts). Ties go to the leftmost cell.
struct OverlapExtremals {
  int largest = 0;
  int smallest = 0;
};
OverlapExtremals overlap_extremals(const Interval& piece, const Grid& grid);

enum class WorklistOrder { fifo, lifo, random };

/// Splits leaves of `initial` while |D| > alpha |shortest cell of grid meeting D|.
/// Sides within 1e-12 relative of each other count as not greater.
/// The result does not depend on the worklist order. Throws std::domain_error
/// for alpha <= 0 or differing base intervals, std::range_error if a leaf
/// would pass kMaxDyadicLevel.
DyadicGrid dyadic_refine(const Grid& grid, const DyadicGrid& initial, double alpha,
                         WorklistOrder order = WorklistOrder::fifo, std::uint64_t seed = 0);

/// ceil(log2((b - a) / (alpha h))) with h the shortest cell, clamped at 0.
int max_level_bound(const Grid& grid, double alpha);

/// D_1 = refine(lgl(1), {a,b}), D_{j+1} = refine(lgl(j+1), D_j); returns D_1..D_N.
std::vector<DyadicGrid> nested_dyadic_family(int max_order, double alpha,
                                             Interval base = kReferenceInterval);

/// Same sequence without keeping it: `visit(j, D_j)` is called for j = 1..N.
void for_each_nested_dyadic(int max_order, double alpha,
                            const std::function<void(int, const DyadicGrid&)>& visit,
                            Interval base = kReferenceInterval);

/// Neighbouring leaves differ by at most one level. `realized` is the
/// largest level jump; the witness names the first offending pair.
CheckResult check_graded(const DyadicGrid& grid);

/// Every node of `coarse` is a node of `fine`. The witness carries the first
/// missing node as (level, index) in lowest terms. Throws std::domain_error
/// for differing bases.
CheckResult check_nested(const DyadicGrid& coarse, const DyadicGrid& fine);

/// x -> 2x - a maps every node in the left half onto a node.
CheckResult check_closed_under_stretching(const DyadicGrid& grid);

/// Admissible range for |Delta| / |D| between an LGL grid and a dyadic grid
/// derived from it.
struct RatioBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Fresh start from {a, b}: [1/alpha, 2 C_g / min(alpha, 1)].
RatioBounds fresh_start_ratio_bounds(double alpha, double cg);
/// Family member started from its predecessor: [1/alpha, 2 C_g / min(alpha / C_g, 1)].
RatioBounds nested_ratio_bounds(double alpha, double cg);

}  // namespace lgldyadic
