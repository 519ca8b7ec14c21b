#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgldyadic/interval.hpp"

namespace lgldyadic {

/// Locates a violation (or an extremal case) found by a grid predicate.
struct Witness {
  std::vector<std::int64_t> indices;
  std::vector<Interval> intervals;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a predicate. `realized` carries the quantity the predicate
/// measured (a margin, a ratio, ...); its meaning is documented per check.
struct CheckResult {
  bool holds = true;
  double realized = 0.0;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

}  // namespace lgldyadic
