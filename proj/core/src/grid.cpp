#include "lgldyadic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lgldyadic {
namespace {

std::vector<double> differences(const std::vector<double>& nodes) {
  std::vector<double> lengths;
  if (nodes.size() < 2) {
    return lengths;
  }
  lengths.reserve(nodes.size() - 1);
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    lengths.push_back(nodes[j + 1] - nodes[j]);
  }
  return lengths;
}

Interval span_of(const std::vector<double>& nodes) {
  if (nodes.empty()) return {0.0, 0.0};
  return {nodes.front(), nodes.back()};
}

}  // namespace

std::pair<int, int> overlapping_cells(const Grid& grid, const Interval& piece) {
  const auto nodes = grid.nodes();
  // first m with x_{m+1} >= piece.a
  const auto first = std::lower_bound(nodes.begin() + 1, nodes.end(), piece.a);
  // last m with x_m <= piece.b
  const auto last = std::upper_bound(nodes.begin(), nodes.end() - 1, piece.b);
  const int lo = static_cast<int>(first - (nodes.begin() + 1));
  const int hi = static_cast<int>(last - nodes.begin()) - 1;
  return {lo, hi};
}

Grid::Grid(std::vector<double> nodes)
    : interval_(span_of(nodes)), nodes_(std::move(nodes)), lengths_(differences(nodes_)) {
  validate();
}

Grid::Grid(Interval interval, std::vector<double> nodes)
    : interval_(interval), nodes_(std::move(nodes)), lengths_(differences(nodes_)) {
  validate();
}

Grid::Grid(Interval interval, std::vector<double> nodes, std::vector<double> lengths)
    : interval_(interval), nodes_(std::move(nodes)), lengths_(std::move(lengths)) {
  if (lengths_.size() + 1 != nodes_.size()) {
    throw std::invalid_argument("grid needs one length per cell");
  }
  validate();
}

void Grid::validate() const {
  if (nodes_.size() < 2) {
    throw std::invalid_argument("grid needs at least two nodes");
  }
  if (!(interval_.a < interval_.b)) {
    throw std::invalid_argument("grid interval must satisfy a < b");
  }
  if (nodes_.front() != interval_.a || nodes_.back() != interval_.b) {
    throw std::invalid_argument("grid endpoints must match its interval");
  }
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    if (!(nodes_[j] < nodes_[j + 1]) || !(lengths_[j] > 0.0)) {
      throw std::invalid_argument("grid nodes must be strictly increasing (at index " +
                                  std::to_string(j) + ")");
    }
  }
}

std::vector<Interval> partition(const Grid& grid) {
  std::vector<Interval> cells;
  cells.reserve(grid.cell_count());
  for (int j = 0; j < grid.cell_count(); ++j) {
    cells.push_back(grid.cell(j));
  }
  return cells;
}

double check_quasi_uniform(const Grid& grid) {
  const auto lengths = grid.lengths();
  double constant = 1.0;
  for (std::size_t j = 0; j + 1 < lengths.size(); ++j) {
    const double ratio = lengths[j + 1] / lengths[j];
    constant = std::max({constant, ratio, 1.0 / ratio});
  }
  return constant;
}

EquivalenceReport check_equivalence(const Grid& first, const Grid& second) {
  if (first.interval() != second.interval()) {
    throw std::domain_error("equivalence check needs grids on the same interval");
  }
  const auto x = first.nodes();
  const auto y = second.nodes();
  const auto lx = first.lengths();
  const auto ly = second.lengths();
  const int nx = first.cell_count();
  const int ny = second.cell_count();

  EquivalenceReport report;
  report.min_ratio = INFINITY;
  report.max_ratio = -INFINITY;
  auto record = [&](int i, int j) {
    const double ratio = lx[i] / ly[j];
    if (ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.witness_min = {i, j};
    }
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.witness_max = {i, j};
    }
  };

  int i = 0;
  int j = 0;
  while (i < nx && j < ny) {
    record(i, j);
    const double end_x = x[i + 1];
    const double end_y = y[j + 1];
    if (end_x < end_y) {
      ++i;
    } else if (end_y < end_x) {
      ++j;
    } else {
      // Shared node: the cells on either side touch there.
      if (i + 1 < nx) record(i + 1, j);
      if (j + 1 < ny) record(i, j + 1);
      ++i;
      ++j;
    }
  }
  return report;
}

Interval stretch(const Interval& piece, const Interval& base) {
  if (piece.a < base.a || piece.b > base.midpoint() || piece.a > piece.b) {
    throw std::domain_error("stretch needs a subinterval of the left half");
  }
  return {2.0 * piece.a - base.a, 2.0 * piece.b - base.a};
}

bool is_symmetric(const Grid& grid) {
  const auto x = grid.nodes();
  const Interval base = grid.interval();
  const double tol = kSymmetryTolerance * base.length();
  const std::size_t n = x.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::fabs((x[k] - base.a) - (base.b - x[n - k])) > tol) {
      return false;
    }
  }
  return true;
}

CheckResult check_str(const Grid& grid, StrBoundary mode) {
  if (!is_symmetric(grid)) {
    throw std::domain_error("property Str is defined for symmetric grids only");
  }
  const Interval base = grid.interval();
  const double quarter = base.a + 0.25 * base.length();
  const double tol = kLengthTolerance * base.length();
  const auto lengths = grid.lengths();

  CheckResult result;
  result.realized = INFINITY;
  for (int j = 0; j < grid.cell_count(); ++j) {
    const Interval cell = grid.cell(j);
    if (cell.b > quarter) {
      break;
    }
    if (mode == StrBoundary::strict && !(cell.a > base.a)) {
      continue;
    }
    const Interval stretched = stretch(cell, base);
    const double stretched_length = 2.0 * lengths[j];
    const auto [lo, hi] = overlapping_cells(grid, stretched);
    for (int m = lo; m <= hi; ++m) {
      const double margin = stretched_length - lengths[m];
      result.realized = std::min(result.realized, margin);
      if (margin < -tol && result.holds) {
        result.holds = false;
        result.witness = Witness{{j, m}, {cell, grid.cell(m)}, "cell meets the stretched image and is longer"};
      }
    }
  }
  if (result.realized == INFINITY) {
    result.realized = 0.0;  // no cell inside the first quarter
  }
  return result;
}

bool check_monotone_symmetric(const Grid& grid) {
  if (!is_symmetric(grid)) {
    return false;
  }
  const Interval base = grid.interval();
  const double mid = base.midpoint();
  const double tol = kLengthTolerance * base.length();
  const auto x = grid.nodes();
  const auto lengths = grid.lengths();
  for (int j = 0; j + 1 < grid.cell_count(); ++j) {
    if (x[j + 2] > mid + tol) {
      break;
    }
    if (lengths[j] > lengths[j + 1] + tol) {
      return false;
    }
  }
  return true;
}

}  // namespace lgldyadic
