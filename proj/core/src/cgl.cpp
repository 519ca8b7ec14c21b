#include "lgldyadic/cgl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgldyadic {
namespace {

constexpr double pi = std::numbers::pi;

void require_same_order(int a, int b) {
  if (a != b) throw std::domain_error("LGL and CGL grids must have the same order");
}

}  // namespace

CglGrid::CglGrid(int order, Interval interval) : order_(order), interval_(interval) {
  if (order < 1) throw std::out_of_range("CGL order must be positive");
  if (!(interval.a < interval.b)) throw std::invalid_argument("interval must satisfy a < b");
  const int n = order;
  const double half = 0.5 * interval.length();
  nodes_.resize(n + 1);
  angles_.resize(n + 1);
  lengths_.resize(n);
  nodes_[0] = interval.a;
  nodes_[n] = interval.b;
  for (int k = 0; k <= n; ++k) angles_[k] = pi * k / n;
  // 1 - cos(theta) = 2 sin^2(theta/2) keeps relative accuracy near the ends
  for (int k = 1; 2 * k < n; ++k) {
    const double s = std::sin(0.5 * pi * k / n);
    const double offset = 2.0 * s * s;
    nodes_[k] = interval.a + half * offset;
    nodes_[n - k] = interval.b - half * offset;
  }
  if (n % 2 == 0) nodes_[n / 2] = interval.midpoint();
  for (int k = 0; k < n; ++k) lengths_[k] = half * cgl_interval_length(n, k);
}

Grid CglGrid::to_grid() const { return Grid(interval_, nodes_, lengths_); }

CglGrid cgl_grid(int order, Interval interval) { return CglGrid(order, interval); }

double cgl_interval_length(int order, int k) {
  if (order < 1 || k < 0 || k >= order) throw std::out_of_range("CGL cell index out of range");
  // use the mirror image so the first factor stays well away from pi
  const int m = std::min(k, order - 1 - k);
  return 2.0 * std::sin(pi * (2 * m + 1) / (2.0 * order)) * std::sin(pi / (2.0 * order));
}

std::vector<double> cgl_quotients(const CglGrid& grid) {
  const int n = grid.order();
  std::vector<double> q;
  if (n < 2) return q;
  q.reserve(n - 1);
  for (int k = 1; k < n; ++k) {
    q.push_back(std::sin(pi * (2 * k + 1) / (2.0 * n)) / std::sin(pi * (2 * k - 1) / (2.0 * n)));
  }
  return q;
}

CheckResult check_cgl_monotone(const CglGrid& grid) {
  CheckResult result;
  result.realized = INFINITY;
  const int n = grid.order();
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const double step = cgl_interval_length(n, k) - cgl_interval_length(n, k - 1);
    result.realized = std::min(result.realized, step);
    if (step < -kLengthTolerance && result.holds) {
      result.holds = false;
      result.witness = Witness{{n, k}, {}, "CGL length decreases"};
    }
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

CheckResult check_cgl_quasi_uniform(const CglGrid& grid) {
  CheckResult result;
  result.realized = 1.0;
  const double upper = 1.5 * pi;
  const double lower = 2.0 / (3.0 * pi);
  const std::vector<double> q = cgl_quotients(grid);
  for (std::size_t i = 0; i < q.size(); ++i) {
    result.realized = std::max({result.realized, q[i], 1.0 / q[i]});
    if ((q[i] > upper || q[i] < lower) && result.holds) {
      result.holds = false;
      result.witness = Witness{{grid.order(), static_cast<std::int64_t>(i + 1)}, {}, "Q_k outside [2/(3 pi), 3 pi/2]"};
    }
  }
  return result;
}

CheckResult check_cgl_displacement(const CglGrid& coarse, const CglGrid& fine) {
  if (fine.order() < coarse.order()) {
    throw std::domain_error("displacement compares a grid with one of higher order");
  }
  CheckResult result;
  result.realized = INFINITY;
  const int n = coarse.order();
  const int m = fine.order();
  // left-half lengths increase, so the longest fine cell left of zeta^N_k is
  // the last one starting at or before it: j = floor(k M / N)
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const int j = std::min(static_cast<int>((static_cast<long long>(k) * m) / n), (m - 1) / 2);
    const double margin = cgl_interval_length(n, k) - cgl_interval_length(m, j);
    result.realized = std::min(result.realized, margin);
    if (margin < -kLengthTolerance && result.holds) {
      result.holds = false;
      result.witness = Witness{{n, k, m, j}, {}, "finer CGL cell further out is longer"};
    }
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

double cgl_length_discrepancy(const CglGrid& grid) {
  const CglGrid ref = grid.interval() == kReferenceInterval ? grid : cgl_grid(grid.order());
  const auto nodes = ref.nodes();
  double worst = 0.0;
  for (int k = 0; k < ref.order(); ++k) {
    worst = std::max(worst, std::fabs(cgl_interval_length(ref.order(), k) - (nodes[k + 1] - nodes[k])));
  }
  return worst;
}

CheckResult check_interlacing(const LglGrid& lgl, const CglGrid& cgl) {
  require_same_order(lgl.order(), cgl.order());
  CheckResult result;
  result.realized = INFINITY;
  const auto eta = lgl.angles();
  const auto theta = cgl.angles();
  const int n = lgl.order();
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const double slack = std::min(eta[k] - theta[k], theta[k + 1] - eta[k]);
    result.realized = std::min(result.realized, slack);
    if (slack < 0.0 && result.holds) {
      result.holds = false;
      result.witness = Witness{{n, k}, {}, "LGL node outside its CGL cell pair"};
    }
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

CheckResult check_lgl_in_cgl_cells(const LglGrid& lgl, const CglGrid& cgl) {
  require_same_order(lgl.order(), cgl.order());
  CheckResult result;
  result.realized = INFINITY;
  const auto eta = lgl.angles();
  const auto theta = cgl.angles();
  const int n = lgl.order();
  // [xi_k, xi_{k+1}] within [zeta_k, zeta_{k+2}]; arccos(-x) is increasing
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    if (k + 2 > n) break;
    const double slack = std::min(eta[k] - theta[k], theta[k + 2] - eta[k + 1]);
    result.realized = std::min(result.realized, slack);
    if (slack < 0.0 && result.holds) {
      result.holds = false;
      result.witness = Witness{{n, k}, {}, "LGL cell leaves Lambda_k u Lambda_{k+1}"};
    }
  }
  if (result.realized == INFINITY) result.realized = 0.0;
  return result;
}

LengthRatioEnvelope lgl_cgl_length_ratios(const LglGrid& lgl, const CglGrid& cgl) {
  require_same_order(lgl.order(), cgl.order());
  LengthRatioEnvelope env{INFINITY, 0.0};
  const auto& lengths = lgl.reference().lengths;
  for (int k = 0; k < lgl.order(); ++k) {
    const double r = lengths[k] / cgl_interval_length(cgl.order(), k);
    env.min_ratio = std::min(env.min_ratio, r);
    env.max_ratio = std::max(env.max_ratio, r);
  }
  return env;
}

}  // namespace lgldyadic
