#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lgldyadic/grid.hpp"
#include "lgldyadic/interval.hpp"

namespace lgldyadic {

inline constexpr int kMaxLglOrder = 2000;

/// Reference-interval data shared by every affine image of one order.
struct LglReference {
  int order = 0;
  /// eta_k = arccos(-xi_k), k = 0..N.
  std::vector<double> angles;
  /// 1 + xi_k, k = 0..N. Accurate to full relative precision near -1.
  std::vector<double> offsets;
  /// |Delta_k| on [-1, 1], k = 0..N-1, evaluated from the angles.
  std::vector<double> lengths;
};

/// Legendre-Gauss-Lobatto grid of order N: the N+1 zeros of (1 - x^2) L_N'(x),
/// mapped affinely onto an interval.
class LglGrid {
 public:
  LglGrid(std::shared_ptr<const LglReference> reference, Interval interval);

  int order() const { return reference_->order; }
  const Interval& interval() const { return interval_; }
  std::span<const double> nodes() const { return nodes_; }
  /// Angles live on the reference interval regardless of the mapping.
  std::span<const double> angles() const { return reference_->angles; }
  std::span<const double> lengths() const { return lengths_; }
  const LglReference& reference() const { return *reference_; }

  Grid to_grid() const;

 private:
  std::shared_ptr<const LglReference> reference_;
  Interval interval_;
  std::vector<double> nodes_;
  std::vector<double> lengths_;
};

/// Reference LGL data for one order, computed once and cached.
/// Throws std::out_of_range unless 1 <= order <= kMaxLglOrder.
std::shared_ptr<const LglReference> lgl_reference(int order);

/// Throws std::out_of_range for unsupported orders and std::invalid_argument
/// unless a < b.
LglGrid lgl_grid(int order, Interval interval = kReferenceInterval);

enum class LengthBoundCase { general, boundary, central_odd, near_central_even };

struct AngleBound {
  int k = 0;
  double lower = 0.0;
  double upper = 0.0;
};

struct LengthBound {
  int k = 0;
  double lower = 0.0;
  double upper = 0.0;
  LengthBoundCase kind = LengthBoundCase::general;
};

/// Analytic enclosures on the reference interval.
struct LglBounds {
  int order = 0;
  std::vector<AngleBound> angles;
  std::vector<LengthBound> lengths;
};

/// pi k / N <= eta_k <= pi (2k+1)/(2N+1) for 1 <= k <= floor((N-1)/2).
/// Throws std::out_of_range for order < 2.
LglBounds lgl_angle_bounds(int order);

/// Every length enclosure that applies at this order: the sine-product bounds
/// for 1 <= k <= floor((N-3)/2) (N >= 5), the boundary cell (N >= 3), the
/// central cell for odd N >= 3 and the cell left of the centre for even N >= 4.
/// Throws std::out_of_range for order < 3.
LglBounds lgl_length_bounds(int order);

/// The enclosure for one cell; std::out_of_range if none is claimed there.
LengthBound lgl_length_bound(int order, int k);

/// q_k = |Delta_k| / |Delta_{k-1}| for k = 1..N-1 (element k-1 holds q_k).
std::vector<double> lgl_quotients(const LglGrid& grid);

}  // namespace lgldyadic
