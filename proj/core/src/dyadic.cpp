#include "lgldyadic/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

#include "lgldyadic/lgl.hpp"

namespace lgldyadic {
namespace {

constexpr double kSplitTolerance = 1e-12;

// Strict "greater" with sides closer than the relative tolerance treated as equal.
bool exceeds(double lhs, double rhs) {
  return lhs > rhs && lhs - rhs > kSplitTolerance * std::max(std::fabs(lhs), std::fabs(rhs));
}

// (level, index) of a node key in lowest terms.
DyadicInterval key_to_node(std::uint64_t key) {
  if (key == 0) return {0, 0};
  const int shift = std::min(std::countr_zero(key), kMaxDyadicLevel);
  return {kMaxDyadicLevel - shift, static_cast<std::int64_t>(key >> shift)};
}

Witness node_witness(std::uint64_t key, const Interval& base, const char* note) {
  const DyadicInterval node = key_to_node(key);
  const double x = realize_key(key, base);
  return Witness{{node.level, node.index}, {{x, x}}, note};
}

}  // namespace

double DyadicInterval::length(const Interval& base) const {
  return std::ldexp(base.length(), -level);
}

Interval DyadicInterval::realize(const Interval& base) const {
  return {realize_key(left_key(), base), realize_key(right_key(), base)};
}

double realize_key(std::uint64_t key, const Interval& base) {
  if (key == 0) return base.a;
  if (key == kDyadicKeyEnd) return base.b;
  return base.a + base.length() * std::ldexp(static_cast<double>(key), -kMaxDyadicLevel);
}

DyadicGrid::DyadicGrid(Interval base) : base_(base), leaves_{{0, 0}} {
  if (!(base.a < base.b)) throw std::invalid_argument("interval must satisfy a < b");
}

DyadicGrid::DyadicGrid(Interval base, std::vector<DyadicInterval> leaves)
    : base_(base), leaves_(std::move(leaves)) {
  if (!(base.a < base.b)) throw std::invalid_argument("interval must satisfy a < b");
  if (leaves_.empty()) throw std::invalid_argument("dyadic grid needs at least one leaf");
  for (const DyadicInterval& leaf : leaves_) {
    if (leaf.level < 0 || leaf.level > kMaxDyadicLevel || leaf.index < 0 ||
        leaf.index >= (std::int64_t{1} << leaf.level)) {
      throw std::invalid_argument("dyadic leaf outside the base interval");
    }
  }
  std::sort(leaves_.begin(), leaves_.end(), [](const DyadicInterval& x, const DyadicInterval& y) {
    return x.left_key() < y.left_key();
  });
  std::uint64_t expected = 0;
  for (const DyadicInterval& leaf : leaves_) {
    if (leaf.left_key() != expected) throw std::invalid_argument("dyadic leaves overlap or leave a gap");
    expected = leaf.right_key();
  }
  if (expected != kDyadicKeyEnd) throw std::invalid_argument("dyadic leaves do not reach b");
}

int DyadicGrid::max_level() const {
  int level = 0;
  for (const DyadicInterval& leaf : leaves_) level = std::max(level, leaf.level);
  return level;
}

std::vector<std::uint64_t> DyadicGrid::node_keys() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(leaves_.size() + 1);
  for (const DyadicInterval& leaf : leaves_) keys.push_back(leaf.left_key());
  keys.push_back(kDyadicKeyEnd);
  return keys;
}

std::vector<double> DyadicGrid::nodes() const {
  std::vector<double> out;
  out.reserve(leaves_.size() + 1);
  for (std::uint64_t key : node_keys()) out.push_back(realize_key(key, base_));
  return out;
}

Grid DyadicGrid::to_grid() const {
  std::vector<double> lengths;
  lengths.reserve(leaves_.size());
  for (const DyadicInterval& leaf : leaves_) lengths.push_back(leaf.length(base_));
  return Grid(base_, nodes(), std::move(lengths));
}

OverlapExtremals overlap_extremals(const Interval& piece, const Grid& grid) {
  const auto [first, last] = overlapping_cells(grid, piece);
  const auto lengths = grid.lengths();
  OverlapExtremals out{first, first};
  for (int j = first + 1; j <= last; ++j) {
    if (lengths[j] > lengths[out.largest]) out.largest = j;
    if (lengths[j] < lengths[out.smallest]) out.smallest = j;
  }
  return out;
}

DyadicGrid dyadic_refine(const Grid& grid, const DyadicGrid& initial, double alpha,
                         WorklistOrder order, std::uint64_t seed) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::domain_error("alpha must be positive");
  const Interval& base = initial.base();
  if (!(grid.interval() == base)) throw std::domain_error("grid and dyadic grid have different bases");

  std::deque<DyadicInterval> work(initial.leaves().begin(), initial.leaves().end());
  std::mt19937_64 rng(seed);
  std::vector<DyadicInterval> done;
  const auto lengths = grid.lengths();

  while (!work.empty()) {
    DyadicInterval leaf;
    switch (order) {
      case WorklistOrder::fifo:
        leaf = work.front();
        work.pop_front();
        break;
      case WorklistOrder::lifo:
        leaf = work.back();
        work.pop_back();
        break;
      case WorklistOrder::random: {
        std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
        const std::size_t i = pick(rng);
        leaf = work[i];
        work[i] = work.back();
        work.pop_back();
        break;
      }
    }
    const OverlapExtremals ext = overlap_extremals(leaf.realize(base), grid);
    if (!exceeds(leaf.length(base), alpha * lengths[ext.smallest])) {
      done.push_back(leaf);
      continue;
    }
    if (leaf.level == kMaxDyadicLevel) throw std::range_error("dyadic refinement exceeds the deepest level");
    work.push_back(leaf.left_child());
    work.push_back(leaf.right_child());
  }
  return DyadicGrid(base, std::move(done));
}

int max_level_bound(const Grid& grid, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  const auto lengths = grid.lengths();
  const double target = alpha * *std::min_element(lengths.begin(), lengths.end());
  int level = 0;
  while (level < kMaxDyadicLevel && exceeds(std::ldexp(grid.interval().length(), -level), target)) ++level;
  return level;
}

void for_each_nested_dyadic(int max_order, double alpha,
                            const std::function<void(int, const DyadicGrid&)>& visit,
                            Interval base) {
  if (max_order < 1) throw std::out_of_range("family needs max_order >= 1");
  DyadicGrid current(base);
  for (int j = 1; j <= max_order; ++j) {
    current = dyadic_refine(lgl_grid(j, base).to_grid(), current, alpha);
    visit(j, current);
  }
}

std::vector<DyadicGrid> nested_dyadic_family(int max_order, double alpha, Interval base) {
  std::vector<DyadicGrid> family;
  for_each_nested_dyadic(
      max_order, alpha, [&](int, const DyadicGrid& d) { family.push_back(d); }, base);
  return family;
}

CheckResult check_graded(const DyadicGrid& grid) {
  CheckResult result;
  const auto& leaves = grid.leaves();
  int worst = 0;
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    const int jump = std::abs(leaves[i].level - leaves[i + 1].level);
    worst = std::max(worst, jump);
    if (jump > 1 && result.holds) {
      result.holds = false;
      result.witness = Witness{{static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1)},
                               {leaves[i].realize(grid.base()), leaves[i + 1].realize(grid.base())},
                               "neighbouring leaves differ by more than one level"};
    }
  }
  result.realized = worst;
  return result;
}

CheckResult check_nested(const DyadicGrid& coarse, const DyadicGrid& fine) {
  if (!(coarse.base() == fine.base())) throw std::domain_error("dyadic grids have different bases");
  const std::vector<std::uint64_t> a = coarse.node_keys();
  const std::vector<std::uint64_t> b = fine.node_keys();
  CheckResult result;
  std::size_t missing = 0;
  auto it = b.begin();
  for (std::uint64_t key : a) {
    it = std::lower_bound(it, b.end(), key);
    if (it != b.end() && *it == key) continue;
    if (missing++ == 0) {
      result.holds = false;
      result.witness = node_witness(key, coarse.base(), "node of the coarser grid missing in the finer grid");
    }
  }
  result.realized = static_cast<double>(missing);
  return result;
}

CheckResult check_closed_under_stretching(const DyadicGrid& grid) {
  const std::vector<std::uint64_t> keys = grid.node_keys();
  CheckResult result;
  std::size_t missing = 0;
  for (std::uint64_t key : keys) {
    if (key > kDyadicKeyEnd / 2) break;
    if (std::binary_search(keys.begin(), keys.end(), 2 * key)) continue;
    if (missing++ == 0) {
      result.holds = false;
      result.witness = node_witness(key, grid.base(), "stretched image of this node is not a node");
    }
  }
  result.realized = static_cast<double>(missing);
  return result;
}

RatioBounds fresh_start_ratio_bounds(double alpha, double cg) {
  return {1.0 / alpha, 2.0 * cg / std::min(alpha, 1.0)};
}

RatioBounds nested_ratio_bounds(double alpha, double cg) {
  return {1.0 / alpha, 2.0 * cg / std::min(alpha / cg, 1.0)};
}

}  // namespace lgldyadic
