#pragma once

#include <array>

#include "lgldyadic/lgl.hpp"

namespace lgldyadic {

/// j_{1,0} = 0 followed by the first eleven positive zeros of J_1.
const std::array<double, 12>& bessel_j1_zeros();

/// Limit of the LGL quotient q_k as N grows:
/// (j_{1,k+1}^2 - j_{1,k}^2) / (j_{1,k}^2 - j_{1,k-1}^2). Needs 1 <= k <= 10.
double qhat(int k);

/// |q_k^N - qhat(k)|. Needs 1 <= k <= min(10, N - 1).
double limit_gap(const LglGrid& grid, int k);

/// |N eta_k - j_{1,k}|. Needs 1 <= k <= min(11, N).
double angle_limit_gap(const LglGrid& grid, int k);

}  // namespace lgldyadic
