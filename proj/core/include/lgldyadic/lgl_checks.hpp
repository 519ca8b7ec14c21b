#pragma once

#include "lgldyadic/check_result.hpp"
#include "lgldyadic/lgl.hpp"

namespace lgldyadic {

/// Additive tolerance for quotient and angle comparisons.
inline constexpr double kQuotientTolerance = 1e-12;

/// |L_N'(xi_k)| / (|L_N''(xi_k)| * min(|Delta_{k-1}|, |Delta_k|)) on the
/// reference interval: the residual expressed as a fraction of the local
/// cell size. Requires 1 <= k <= N-1.
double lgl_node_residual(const LglGrid& grid, int k);

/// Every interior angle lies in its analytic bracket (slack 1e-12).
/// `realized` is the smallest slack to either side.
CheckResult check_angle_sandwich(const LglGrid& grid);

/// Every cell with a claimed length enclosure lies inside it (slack 1e-12,
/// reference lengths). `realized` is the smallest slack. Needs order >= 3.
CheckResult check_length_sandwich(const LglGrid& grid);

/// Quotients decrease in k: q_k >= q_{k+1} for 1 <= k <= floor((N-3)/2).
/// `realized` is min(q_k - q_{k+1}).
CheckResult check_mq_decreasing_in_k(const LglGrid& grid);

/// Quotients increase with the order: q_k^N <= q_k^{N+1} for k in {1, 2},
/// k <= floor(N/2). `realized` is min(q_k^{N+1} - q_k^N).
CheckResult check_mq_increasing_in_order(const LglGrid& grid, const LglGrid& next);

/// Left-half displacement for orders M >= N: whenever xi^M_j <= xi^N_k,
/// |Delta^M_j| <= |Delta^N_k|. Positions are compared through the angles.
/// `realized` is the smallest length margin. Throws std::domain_error if the
/// finer grid has the lower order.
CheckResult check_displacement(const LglGrid& coarse, const LglGrid& fine);

/// For consecutive nodes (xi_s, xi_{s+1}, xi_{s+2}) with
/// 0 <= s <= floor((N-3)/2) - 1, c = |Delta_s|/|Delta_{s+1}| and
/// delta = c xi_{s+1} - xi_s: (c^2 + delta^2 - 1) / (2 delta c) < xi_{s+2}.
/// Evaluated in endpoint-offset form; `realized` is the smallest margin
/// xi_{s+2} - lhs.
CheckResult check_convexity_condition(const LglGrid& grid);

}  // namespace lgldyadic
