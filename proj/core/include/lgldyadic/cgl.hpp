#pragma once

#include <span>
#include <vector>

#include "lgldyadic/check_result.hpp"
#include "lgldyadic/grid.hpp"
#include "lgldyadic/interval.hpp"
#include "lgldyadic/lgl.hpp"

namespace lgldyadic {

/// Chebyshev-Gauss-Lobatto grid: zeta_k = affine image of -cos(pi k / N).
class CglGrid {
 public:
  CglGrid(int order, Interval interval);

  int order() const { return order_; }
  const Interval& interval() const { return interval_; }
  std::span<const double> nodes() const { return nodes_; }
  /// theta_k = pi k / N.
  std::span<const double> angles() const { return angles_; }
  /// Closed-form lengths scaled to the interval.
  std::span<const double> lengths() const { return lengths_; }

  Grid to_grid() const;

 private:
  int order_;
  Interval interval_;
  std::vector<double> nodes_;
  std::vector<double> angles_;
  std::vector<double> lengths_;
};

/// Throws std::out_of_range for order < 1 and std::invalid_argument unless a < b.
CglGrid cgl_grid(int order, Interval interval = kReferenceInterval);

/// 2 sin(pi (2k+1) / 2N) sin(pi / 2N) on [-1, 1]. std::out_of_range unless 0 <= k < N.
double cgl_interval_length(int order, int k);

/// Q_k = sin(pi (2k+1)/2N) / sin(pi (2k-1)/2N) for k = 1..N-1 (element k-1 holds Q_k).
std::vector<double> cgl_quotients(const CglGrid& grid);

/// Lengths non-decreasing for 1 <= k <= floor((N-1)/2). `realized` is the
/// smallest increment.
CheckResult check_cgl_monotone(const CglGrid& grid);

/// 2/(3 pi) <= Q_k <= 3 pi / 2 for every k. `realized` is max(Q, 1/Q).
CheckResult check_cgl_quasi_uniform(const CglGrid& grid);

/// Left-half displacement between CGL orders M >= N, as for LGL grids.
CheckResult check_cgl_displacement(const CglGrid& coarse, const CglGrid& fine);

/// Largest |closed-form length - node difference| on the reference interval.
double cgl_length_discrepancy(const CglGrid& grid);

/// zeta_k <= xi_k <= zeta_{k+1} for 1 <= k <= floor((N-1)/2), compared
/// through the angles. Both grids must have the same order.
CheckResult check_interlacing(const LglGrid& lgl, const CglGrid& cgl);

/// Delta_k is contained in Lambda_k union Lambda_{k+1} for
/// 1 <= k <= floor((N-1)/2).
CheckResult check_lgl_in_cgl_cells(const LglGrid& lgl, const CglGrid& cgl);

/// Extremal |Delta_k| / |Lambda_k| over all cells of two grids of one order.
struct LengthRatioEnvelope {
  double min_ratio = 1.0;
  double max_ratio = 1.0;
};
LengthRatioEnvelope lgl_cgl_length_ratios(const LglGrid& lgl, const CglGrid& cgl);

}  // namespace lgldyadic
