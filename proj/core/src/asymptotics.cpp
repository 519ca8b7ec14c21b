#include "lgldyadic/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace lgldyadic {

const std::array<double, 12>& bessel_j1_zeros() {
  static constexpr std::array<double, 12> zeros{
      0.0,
      3.8317059702075123156,
      7.0155866698156187535,
      10.173468135062722077,
      13.323691936314223032,
      16.470630050877632813,
      19.615858510468242021,
      22.760084380592771898,
      25.903672087618382625,
      29.046828534916855067,
      32.189679910974403627,
      35.332307550083865103,
  };
  return zeros;
}

double qhat(int k) {
  if (k < 1 || k > 10) throw std::out_of_range("qhat is tabulated for 1 <= k <= 10");
  const auto& j = bessel_j1_zeros();
  const auto sq = [&](int i) { return j[i] * j[i]; };
  return (sq(k + 1) - sq(k)) / (sq(k) - sq(k - 1));
}

double limit_gap(const LglGrid& grid, int k) {
  if (k > grid.order() - 1) throw std::out_of_range("grid has no quotient q_k");
  const double limit = qhat(k);
  const auto& lengths = grid.reference().lengths;
  return std::fabs(lengths[k] / lengths[k - 1] - limit);
}

double angle_limit_gap(const LglGrid& grid, int k) {
  if (k < 1 || k > 11 || k > grid.order()) throw std::out_of_range("no tabulated zero for this angle");
  return std::fabs(grid.order() * grid.angles()[k] - bessel_j1_zeros()[k]);
}

}  // namespace lgldyadic
