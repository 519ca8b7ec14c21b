#include "lgldyadic/lgl_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgldyadic/legendre.hpp"

namespace lgldyadic {
namespace {

// Record the first violation; keep tracking the extremal margin.
void observe(CheckResult& result, double margin, bool violated, Witness witness) {
  result.realized = std::min(result.realized, margin);
  if (violated && result.holds) {
    result.holds = false;
    result.witness = std::move(witness);
  }
}

CheckResult fresh() {
  CheckResult result;
  result.realized = INFINITY;
  return result;
}

}  // namespace

double lgl_node_residual(const LglGrid& grid, int k) {
  const int n = grid.order();
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("residual is defined for interior nodes only");
  }
  const LglReference& ref = grid.reference();
  const int mirrored = std::min(k, n - k);
  const LegendreEval e =
      legendre_eval_near_endpoint(n, Endpoint::left, ref.offsets[mirrored]);
  const double cell = std::min(ref.lengths[k - 1], ref.lengths[k]);
  return std::fabs(e.derivative) / (std::fabs(e.second_derivative) * cell);
}

CheckResult check_angle_sandwich(const LglGrid& grid) {
  CheckResult result = fresh();
  if (grid.order() < 3) {
    result.realized = 0.0;
    return result;
  }
  const auto angles = grid.angles();
  for (const AngleBound& bound : lgl_angle_bounds(grid.order()).angles) {
    const double eta = angles[bound.k];
    const double slack = std::min(eta - bound.lower, bound.upper - eta);
    observe(result, slack, slack < -kQuotientTolerance,
            Witness{{bound.k}, {{bound.lower, bound.upper}}, "angle outside its bracket"});
  }
  return result;
}

CheckResult check_length_sandwich(const LglGrid& grid) {
  CheckResult result = fresh();
  const auto& lengths = grid.reference().lengths;
  for (const LengthBound& bound : lgl_length_bounds(grid.order()).lengths) {
    const double length = lengths[bound.k];
    const double slack = std::min(length - bound.lower, bound.upper - length);
    observe(result, slack, slack < -kQuotientTolerance,
            Witness{{bound.k, static_cast<std::int64_t>(bound.kind)},
                    {{bound.lower, bound.upper}},
                    "cell length outside its enclosure"});
  }
  return result;
}

CheckResult check_mq_decreasing_in_k(const LglGrid& grid) {
  CheckResult result = fresh();
  const std::vector<double> q = lgl_quotients(grid);
  for (int k = 1; k <= (grid.order() - 3) / 2; ++k) {
    const double margin = q[k - 1] - q[k];
    observe(result, margin, margin < -kQuotientTolerance,
            Witness{{grid.order(), k}, {}, "q_k < q_{k+1}"});
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

CheckResult check_mq_increasing_in_order(const LglGrid& grid, const LglGrid& next) {
  if (next.order() != grid.order() + 1) {
    throw std::domain_error("MQ order comparison needs consecutive orders");
  }
  CheckResult result = fresh();
  const std::vector<double> q = lgl_quotients(grid);
  const std::vector<double> q_next = lgl_quotients(next);
  for (int k = 1; k <= std::min(2, grid.order() / 2); ++k) {
    if (k > static_cast<int>(q.size())) break;
    const double margin = q_next[k - 1] - q[k - 1];
    observe(result, margin, margin < -kQuotientTolerance,
            Witness{{grid.order(), k}, {}, "q_k^N > q_k^{N+1}"});
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

CheckResult check_displacement(const LglGrid& coarse, const LglGrid& fine) {
  if (fine.order() < coarse.order()) {
    throw std::domain_error("displacement compares a grid with one of higher order");
  }
  CheckResult result = fresh();
  const auto& coarse_ref = coarse.reference();
  const auto& fine_ref = fine.reference();
  const int coarse_half = (coarse.order() - 1) / 2;
  const int fine_half = (fine.order() - 1) / 2;

  // running maximum of the fine lengths from the boundary inwards
  std::vector<double> running_max(fine_half + 1);
  double current = 0.0;
  for (int j = 0; j <= fine_half; ++j) {
    current = std::max(current, fine_ref.lengths[j]);
    running_max[j] = current;
  }
  const auto fine_begin = fine_ref.angles.begin();
  const auto fine_end = fine_begin + fine_half + 1;
  const double tol = 2.0 * kLengthTolerance;
  for (int k = 0; k <= coarse_half; ++k) {
    const auto it = std::upper_bound(fine_begin, fine_end, coarse_ref.angles[k]);
    const int j = static_cast<int>(it - fine_begin) - 1;
    if (j < 0) continue;
    const double margin = coarse_ref.lengths[k] - running_max[j];
    observe(result, margin, margin < -tol,
            Witness{{coarse.order(), k, fine.order(), j}, {}, "finer cell further out is longer"});
  }
  return result;
}

CheckResult check_convexity_condition(const LglGrid& grid) {
  CheckResult result = fresh();
  const auto& ref = grid.reference();
  const auto& t = ref.offsets;  // 1 + xi
  const auto& len = ref.lengths;
  const int last = (grid.order() - 3) / 2 - 1;
  for (int s = 0; s <= last; ++s) {
    const double c = len[s] / len[s + 1];
    const double e = c * t[s + 1] - t[s];
    const double delta = (1.0 - c) + e;
    // (c^2 + delta^2 - 1)/(2 delta c) < xi_{s+2}  <=>  (2e + e^2)/(2 delta c) < 1 + xi_{s+2}
    const double margin = t[s + 2] - (2.0 * e + e * e) / (2.0 * delta * c);
    observe(result, margin, !(margin > 0.0), Witness{{grid.order(), s}, {}, "convexity condition violated"});
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

}  // namespace lgldyadic
