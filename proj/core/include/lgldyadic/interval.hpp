#pragma once

namespace lgldyadic {

/// Closed interval [a, b].
struct Interval {
  double a = -1.0;
  double b = 1.0;

  double length() const { return b - a; }
  double midpoint() const { return a + 0.5 * (b - a); }

  /// Closed-set intersection test; touching at one point counts.
  bool intersects(const Interval& other) const { return a <= other.b && other.a <= b; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kReferenceInterval{-1.0, 1.0};

}  // namespace lgldyadic
