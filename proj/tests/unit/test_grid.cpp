#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lgldyadic/cgl.hpp"
#include "lgldyadic/grid.hpp"
#include "lgldyadic/lgl.hpp"

using namespace lgldyadic;

namespace {

// Running extremes of the pair ratios for M in [ceil(N/2), N], N <= up_to.
struct Envelope {
  double lo = 1.0;
  double hi = 1.0;
};

template <class Make>
std::vector<Envelope> pair_envelopes(int up_to, Make make) {
  std::vector<Envelope> running(up_to + 1);
  Envelope env;
  for (int n = 2; n <= up_to; ++n) {
    const Grid fine = make(n);
    for (int m = (n + 1) / 2; m <= n; ++m) {
      const EquivalenceReport r = check_equivalence(fine, make(m));
      env.lo = std::min(env.lo, r.min_ratio);
      env.hi = std::max(env.hi, r.max_ratio);
    }
    running[n] = env;
  }
  return running;
}

}  // namespace

TEST_CASE("partition") {
  const auto cells = partition(Grid({0.0, 1.0, 2.0}));
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == Interval{0.0, 1.0});
  CHECK(cells[1] == Interval{1.0, 2.0});
  CHECK(partition(Grid({-1.0, 1.0})) == std::vector<Interval>{{-1.0, 1.0}});
  CHECK(partition(lgl_grid(2).to_grid()) == std::vector<Interval>{{-1.0, 0.0}, {0.0, 1.0}});
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid(std::vector<double>{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 1.0, 1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 3.0}, {0.0, 1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 2.0}, {0.0, 1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("quasi-uniformity constant") {
  CHECK(check_quasi_uniform(Grid({0.0, 1.0, 2.0, 3.0})) == 1.0);
  CHECK(check_quasi_uniform(Grid({0.0, 1.0, 3.0})) == 2.0);
  CHECK(check_quasi_uniform(Grid({0.0, 5.0})) == 1.0);
  CHECK(std::fabs(check_quasi_uniform(lgl_grid(2000).to_grid()) - 2.352303456118672) <= 1e-12);
}

TEST_CASE("equivalence sweep") {
  const Grid g = lgl_grid(17).to_grid();
  const EquivalenceReport self = check_equivalence(g, g);
  // neighbours touch, so the self-envelope is [1/C, C]
  const double c = check_quasi_uniform(g);
  CHECK(self.max_ratio == doctest::Approx(c).epsilon(1e-15));
  CHECK(self.min_ratio == doctest::Approx(1.0 / c).epsilon(1e-15));

  const EquivalenceReport halves = check_equivalence(Grid({0.0, 1.0, 2.0}), Grid({0.0, 2.0}));
  CHECK(halves.min_ratio == 0.5);
  CHECK(halves.max_ratio == 0.5);

  // touching at a shared node counts: [0,1] meets [1,3] of the second grid
  const EquivalenceReport touch = check_equivalence(Grid({0.0, 1.0, 3.0}), Grid({0.0, 1.0, 3.0}));
  CHECK(touch.min_ratio == 0.5);
  CHECK(touch.max_ratio == 2.0);

  const EquivalenceReport ab = check_equivalence(lgl_grid(10).to_grid(), lgl_grid(20).to_grid());
  const EquivalenceReport ba = check_equivalence(lgl_grid(20).to_grid(), lgl_grid(10).to_grid());
  CHECK(ab.min_ratio > 0.0);
  CHECK(std::isfinite(ab.max_ratio));
  CHECK(ab.min_ratio == doctest::Approx(1.0 / ba.max_ratio).epsilon(1e-15));
  CHECK(ab.max_ratio == doctest::Approx(1.0 / ba.min_ratio).epsilon(1e-15));
  // witnesses are overlapping pairs
  const Grid ten = lgl_grid(10).to_grid();
  const Grid twenty = lgl_grid(20).to_grid();
  CHECK(ten.cell(ab.witness_min.first).intersects(twenty.cell(ab.witness_min.second)));
  CHECK(ten.cell(ab.witness_max.first).intersects(twenty.cell(ab.witness_max.second)));

  CHECK_THROWS_AS(check_equivalence(Grid({0.0, 1.0}), Grid({0.0, 2.0})), std::domain_error);
}

TEST_CASE("equivalence envelopes of LGL and CGL pairs stabilise") {
  const auto lgl = pair_envelopes(300, [](int n) { return lgl_grid(n).to_grid(); });
  const auto cgl = pair_envelopes(300, [](int n) { return cgl_grid(n).to_grid(); });
  for (const auto* env : {&lgl, &cgl}) {
    const Envelope at100 = (*env)[100];
    const Envelope at300 = (*env)[300];
    CHECK(at300.hi <= 1.05 * at100.hi);
    CHECK(at300.lo >= at100.lo / 1.05);
  }
}

TEST_CASE("stretching") {
  CHECK(stretch({-1.0, -0.5}) == Interval{-1.0, 0.0});
  CHECK(stretch({-0.5, 0.0}) == Interval{0.0, 1.0});
  CHECK(stretch({0.0, 0.25}, {0.0, 1.0}) == Interval{0.0, 0.5});
  CHECK_THROWS_AS(stretch({-0.5, 0.1}), std::domain_error);
  CHECK_THROWS_AS(stretch({-2.0, -1.0}), std::domain_error);
}

TEST_CASE("property Str") {
  CHECK(check_str(Grid({-1.0, 0.0, 1.0})).holds);
  CHECK(check_str(lgl_grid(20).to_grid()).holds);

  const Grid adversarial({0.0, 0.2, 0.25, 0.3, 0.7, 0.75, 0.8, 1.0});
  for (StrBoundary mode : {StrBoundary::strict, StrBoundary::include_boundary_interval}) {
    const CheckResult r = check_str(adversarial, mode);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->intervals[0] == Interval{0.2, 0.25});
    CHECK(r.witness->intervals[1] == Interval{0.3, 0.7});
  }

  // with the boundary cell included the second LGL cell is always too long
  const CheckResult boundary = check_str(lgl_grid(20).to_grid(), StrBoundary::include_boundary_interval);
  CHECK_FALSE(boundary.holds);
  CHECK(boundary.witness->indices == std::vector<std::int64_t>{0, 1});

  CHECK_THROWS_AS(check_str(Grid({-1.0, -0.5, 0.6, 1.0})), std::domain_error);
}

TEST_CASE("monotone-symmetric grids") {
  CHECK(check_monotone_symmetric(Grid({-1.0, 0.0, 1.0})));
  CHECK(check_monotone_symmetric(Grid({-1.0, -0.9, 0.9, 1.0})));
  CHECK_FALSE(check_monotone_symmetric(Grid({-1.0, -0.5, 0.6, 1.0})));
  CHECK_FALSE(check_monotone_symmetric(Grid({-1.0, -0.5, -0.4, 0.4, 0.5, 1.0})));
  CHECK(check_monotone_symmetric(lgl_grid(301).to_grid()));
}

TEST_CASE("overlapping cells") {
  const Grid g({0.0, 1.0, 2.0, 3.0});
  CHECK(overlapping_cells(g, {1.0, 1.0}) == std::pair{0, 1});
  CHECK(overlapping_cells(g, {0.2, 0.4}) == std::pair{0, 0});
  CHECK(overlapping_cells(g, {0.5, 2.0}) == std::pair{0, 2});
}
