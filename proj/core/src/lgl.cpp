#include "lgldyadic/lgl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "lgldyadic/legendre.hpp"

namespace lgldyadic {
namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr double kAngleTolerance = 4.0 * std::numeric_limits<double>::epsilon();

void check_order(int order) {
  if (order < 1 || order > kMaxLglOrder) {
    throw std::out_of_range("LGL order " + std::to_string(order) + " outside [1, " +
                            std::to_string(kMaxLglOrder) + "]");
  }
}

double half_versine(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

// Starting guess from the Bessel limit N eta_k -> j_{1,k}: McMahon's expansion
// of the k-th zero of J_1, scaled by sqrt(N(N+1)).
double initial_angle(int order, int k) {
  const double beta = (k + 0.25) * std::numbers::pi;
  const double zero = beta - 3.0 / (8.0 * beta) + 3.0 / (128.0 * beta * beta * beta);
  return zero / std::sqrt(static_cast<double>(order) * (order + 1.0));
}

// k-th zero of L_N'(-cos theta) inside [lo, hi]: Newton in the angle, falling
// back to bisection whenever a step would leave the current bracket. The sign
// of L_N'(-cos theta) between consecutive zeros is known, so the bracket ends
// are never evaluated.
double solve_angle(int order, int k, double lo, double hi) {
  auto residual = [order](double theta) {
    const LegendreEval e = legendre_eval_near_endpoint(order, Endpoint::left, half_versine(theta));
    return std::pair{e.derivative, e.second_derivative * std::sin(theta)};
  };
  // L_N'(-1) has sign (-1)^(N-1); each zero passed flips it.
  const bool negative_at_lo = (order - 1 + k - 1) % 2 == 1;
  const double lo0 = lo;
  const double hi0 = hi;

  double theta = initial_angle(order, k);
  if (!(theta > lo && theta < hi)) {
    theta = 0.5 * (lo + hi);
  }
  for (int iteration = 0; iteration < kMaxNewtonIterations; ++iteration) {
    const auto [f, df] = residual(theta);
    if (f == 0.0) {
      return theta;
    }
    if ((f < 0.0) == negative_at_lo) {
      lo = theta;
    } else {
      hi = theta;
    }
    const double step = f / df;
    double next = theta - step;
    if (std::fabs(step) <= kAngleTolerance * theta || hi - lo <= kAngleTolerance * hi) {
      next = std::clamp(next, lo, hi);
      // converging onto an end of the analytic bracket means the root was not in it
      if (!(next > lo0 && next < hi0)) {
        break;
      }
      return next;
    }
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    theta = next;
  }
  throw std::logic_error("LGL root solver did not converge at order " + std::to_string(order));
}

std::shared_ptr<const LglReference> compute_reference(int order) {
  constexpr double pi = std::numbers::pi;
  auto ref = std::make_shared<LglReference>();
  ref->order = order;
  ref->angles.assign(order + 1, 0.0);
  ref->offsets.assign(order + 1, 0.0);
  ref->lengths.assign(order, 0.0);

  ref->angles[order] = pi;
  ref->offsets[order] = 2.0;
  if (order % 2 == 0) {
    ref->angles[order / 2] = 0.5 * pi;
    ref->offsets[order / 2] = 1.0;
  }

  const int half = (order - 1) / 2;
  for (int k = 1; k <= half; ++k) {
    const double lower = pi * k / order;
    const double upper = pi * (2.0 * k + 1.0) / (2.0 * order + 1.0);
    const double eta = solve_angle(order, k, lower, upper);
    ref->angles[k] = eta;
    ref->angles[order - k] = pi - eta;
    ref->offsets[k] = half_versine(eta);
    ref->offsets[order - k] = 2.0 - ref->offsets[k];
  }

  // cos(eta_k) - cos(eta_{k+1}) in product form, mirrored onto the right half.
  for (int k = 0; k <= (order - 1) / 2; ++k) {
    const double left = ref->angles[k];
    const double right = ref->angles[k + 1];
    const double length = 2.0 * std::sin(0.5 * (left + right)) * std::sin(0.5 * (right - left));
    ref->lengths[k] = length;
    ref->lengths[order - 1 - k] = length;
  }
  return ref;
}

std::optional<LengthBound> claimed_length_bound(int order, int k) {
  constexpr double pi = std::numbers::pi;
  const double n = order;
  if (order >= 3 && k == 0) {
    return LengthBound{k, 4.0 / (n * n), 9.0 * pi * pi / (2.0 * (2.0 * n + 1.0) * (2.0 * n + 1.0)),
            LengthBoundCase::boundary};
  }
  if (order >= 3 && order % 2 == 1 && k == order / 2) {
    return LengthBound{k, 2.0 / (2.0 * n + 1.0), (4.0 * n - 2.0) / (n * n), LengthBoundCase::central_odd};
  }
  if (order >= 4 && order % 2 == 0 && k == order / 2 - 1) {
    return LengthBound{k, 3.0 / (2.0 * n + 1.0), (4.0 * n - 4.0) / (n * n),
            LengthBoundCase::near_central_even};
  }
  if (order >= 5 && k >= 1 && k <= (order - 3) / 2) {
    const double kk = k;
    const double denominator = n * (2.0 * n + 1.0);
    const double half_pi = 0.5 * pi;
    const double lower = 2.0 * std::sin(half_pi * (4.0 * kk * n + kk + 3.0 * n + 1.0) / denominator) *
                         std::sin(half_pi * (n + kk + 1.0) / denominator);
    const double upper = 2.0 * std::sin(half_pi * (4.0 * kk * n + 3.0 * n + kk) / denominator) *
                         std::sin(half_pi * (3.0 * n - kk) / denominator);
    return LengthBound{k, lower, upper, LengthBoundCase::general};
  }
  return std::nullopt;
}

}  // namespace

std::shared_ptr<const LglReference> lgl_reference(int order) {
  check_order(order);
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const LglReference>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) {
      return it->second;
    }
  }
  auto computed = compute_reference(order);
  std::unique_lock lock(mutex);
  return cache.emplace(order, std::move(computed)).first->second;
}

LglGrid::LglGrid(std::shared_ptr<const LglReference> reference, Interval interval)
    : reference_(std::move(reference)), interval_(interval) {
  if (!(interval_.a < interval_.b)) {
    throw std::invalid_argument("LGL grid interval must satisfy a < b");
  }
  const int n = reference_->order;
  const double half_length = 0.5 * interval_.length();
  nodes_.assign(n + 1, 0.0);
  lengths_.assign(n, 0.0);
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const double shift = half_length * reference_->offsets[k];
    nodes_[k] = interval_.a + shift;
    nodes_[n - k] = interval_.b - shift;
  }
  if (n % 2 == 0) {
    nodes_[n / 2] = interval_.midpoint();
  }
  for (int k = 0; k < n; ++k) {
    lengths_[k] = half_length * reference_->lengths[k];
  }
}

Grid LglGrid::to_grid() const {
  return Grid(interval_, nodes_, lengths_);
}

LglGrid lgl_grid(int order, Interval interval) {
  return LglGrid(lgl_reference(order), interval);
}

LglBounds lgl_angle_bounds(int order) {
  if (order < 2) {
    throw std::out_of_range("LGL angle bounds need order >= 2");
  }
  constexpr double pi = std::numbers::pi;
  LglBounds bounds;
  bounds.order = order;
  for (int k = 1; k <= (order - 1) / 2; ++k) {
    bounds.angles.push_back({k, pi * k / order, pi * (2.0 * k + 1.0) / (2.0 * order + 1.0)});
  }
  return bounds;
}

LengthBound lgl_length_bound(int order, int k) {
  if (auto bound = claimed_length_bound(order, k)) {
    return *bound;
  }
  throw std::out_of_range("no LGL length bound for order " + std::to_string(order) + ", cell " +
                          std::to_string(k));
}

LglBounds lgl_length_bounds(int order) {
  if (order < 3) {
    throw std::out_of_range("LGL length bounds need order >= 3");
  }
  LglBounds bounds;
  bounds.order = order;
  for (int k = 0; k <= order / 2; ++k) {
    if (auto bound = claimed_length_bound(order, k)) {
      bounds.lengths.push_back(*bound);
    }
  }
  return bounds;
}

std::vector<double> lgl_quotients(const LglGrid& grid) {
  const auto lengths = grid.lengths();
  std::vector<double> quotients;
  for (std::size_t k = 1; k < lengths.size(); ++k) {
    quotients.push_back(lengths[k] / lengths[k - 1]);
  }
  return quotients;
}

}  // namespace lgldyadic
