#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lgldyadic/dyadic.hpp"
#include "lgldyadic/dyadic_io.hpp"
#include "lgldyadic/lgl.hpp"

using namespace lgldyadic;

namespace {

const Interval unit{0.0, 1.0};

DyadicGrid from_nodes(const std::vector<std::pair<int, std::int64_t>>& leaves, Interval base = unit) {
  std::vector<DyadicInterval> out;
  for (auto [level, index] : leaves) out.push_back({level, index});
  return DyadicGrid(base, out);
}

DyadicGrid uniform(int level, Interval base = kReferenceInterval) {
  std::vector<DyadicInterval> out;
  for (std::int64_t i = 0; i < (std::int64_t{1} << level); ++i) out.push_back({level, i});
  return DyadicGrid(base, out);
}

}  // namespace

TEST_CASE("dyadic intervals") {
  const DyadicInterval d{3, 5};
  CHECK(d.realize(unit) == Interval{0.625, 0.75});
  CHECK(d.length({-1.0, 1.0}) == 0.25);
  CHECK(d.parent() == DyadicInterval{2, 2});
  CHECK(d.left_child() == DyadicInterval{4, 10});
  CHECK(d.right_child().parent() == d);
  CHECK(DyadicInterval{1, 1}.right_key() == kDyadicKeyEnd);
}

TEST_CASE("leaves must tile the base") {
  CHECK_NOTHROW(from_nodes({{1, 1}, {2, 0}, {2, 1}}));
  CHECK_THROWS_AS(from_nodes({{1, 0}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(from_nodes({{1, 0}, {1, 1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(from_nodes({{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_nodes({}), std::invalid_argument);
  CHECK(from_nodes({{1, 1}, {2, 0}, {2, 1}}).nodes() == std::vector<double>{0.0, 0.25, 0.5, 1.0});
}

TEST_CASE("overlap extremals") {
  const Grid three({-1.0, 0.0, 1.0});
  const OverlapExtremals single = overlap_extremals({-1.0, -0.5}, three);
  CHECK(single.largest == 0);
  CHECK(single.smallest == 0);

  const OverlapExtremals tie = overlap_extremals({-0.25, 0.25}, Grid({-1.0, -0.5, 0.0, 0.5, 1.0}));
  CHECK(tie.smallest == 1);
  CHECK(tie.largest == 1);

  const OverlapExtremals lgl = overlap_extremals({-1.0, 0.0}, lgl_grid(4).to_grid());
  CHECK(lgl.smallest == 0);
  CHECK(lgl.largest == 1);
}

TEST_CASE("refinement fixed points") {
  const DyadicGrid root;
  CHECK(dyadic_refine(Grid({-1.0, 0.0, 1.0}), root, 1.0).nodes() == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(dyadic_refine(Grid({-1.0, 1.0}), root, 1.0).nodes() == std::vector<double>{-1.0, 1.0});

  const DyadicGrid s19 = dyadic_refine(lgl_grid(19).to_grid(), root, 1.0);
  const DyadicGrid s20 = dyadic_refine(lgl_grid(20).to_grid(), root, 1.0);
  const CheckResult nested = check_nested(s19, s20);
  CHECK_FALSE(nested.holds);
  REQUIRE(nested.witness);

  CHECK_THROWS_AS(dyadic_refine(Grid({-1.0, 1.0}), root, 0.0), std::domain_error);
  CHECK_THROWS_AS(dyadic_refine(Grid({-1.0, 1.0}), root, -2.0), std::domain_error);
  CHECK_THROWS_AS(dyadic_refine(Grid({0.0, 1.0}), root, 1.0), std::domain_error);
}

TEST_CASE("refinement does not depend on the worklist order") {
  for (double alpha : {0.5, 1.0, 1.25, 2.0}) {
    for (int n = 1; n <= 40; ++n) {
      const Grid g = lgl_grid(n).to_grid();
      const DyadicGrid fifo = dyadic_refine(g, DyadicGrid(), alpha, WorklistOrder::fifo);
      CHECK(dyadic_refine(g, DyadicGrid(), alpha, WorklistOrder::lifo) == fifo);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        CHECK(dyadic_refine(g, DyadicGrid(), alpha, WorklistOrder::random, seed) == fifo);
      }
      CHECK(fifo.max_level() == max_level_bound(g, alpha));
    }
  }
}

TEST_CASE("refinement keeps a non-trivial starting grid") {
  const DyadicGrid start = uniform(3);
  const DyadicGrid out = dyadic_refine(Grid({-1.0, 1.0}), start, 1.0);
  CHECK(out == start);
  CHECK(check_nested(start, dyadic_refine(lgl_grid(12).to_grid(), start, 1.0)).holds);
}

TEST_CASE("nested family") {
  const auto one = nested_dyadic_family(1, 1.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].nodes() == std::vector<double>{-1.0, 1.0});

  const auto two = nested_dyadic_family(2, 1.0);
  CHECK(two[1].nodes() == std::vector<double>{-1.0, 0.0, 1.0});

  const auto twenty = nested_dyadic_family(20, 1.0);
  CHECK(check_nested(twenty[18], twenty[19]).holds);
  const DyadicGrid fresh = dyadic_refine(lgl_grid(20).to_grid(), DyadicGrid(), 1.0);
  CHECK(check_nested(fresh, twenty[19]).holds);
  CHECK(twenty[19].node_count() > fresh.node_count());

  for (std::size_t j = 1; j < twenty.size(); ++j) CHECK(check_nested(twenty[j - 1], twenty[j]).holds);

  int visited = 0;
  for_each_nested_dyadic(20, 1.0, [&](int n, const DyadicGrid& d) {
    CHECK(d == twenty[n - 1]);
    ++visited;
  });
  CHECK(visited == 20);
  CHECK_THROWS_AS(nested_dyadic_family(0, 1.0), std::out_of_range);
}

TEST_CASE("gradedness") {
  CHECK(check_graded(from_nodes({{1, 0}, {1, 1}})).holds);
  CHECK(check_graded(from_nodes({{1, 0}, {2, 2}, {2, 3}})).holds);
  const CheckResult jump = check_graded(from_nodes({{1, 0}, {3, 4}, {3, 5}, {3, 6}, {3, 7}}));
  CHECK_FALSE(jump.holds);
  CHECK(jump.realized == 2.0);
  CHECK(jump.witness->indices == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("nestedness") {
  const DyadicGrid d = from_nodes({{1, 0}, {1, 1}});
  CHECK(check_nested(d, d).holds);
  CHECK(check_nested(d, from_nodes({{2, 0}, {2, 1}, {1, 1}})).holds);
  const CheckResult r = check_nested(from_nodes({{2, 0}, {2, 1}, {1, 1}}), d);
  CHECK_FALSE(r.holds);
  CHECK(r.witness->indices == std::vector<std::int64_t>{2, 1});
  CHECK(r.witness->intervals[0] == Interval{0.25, 0.25});
  CHECK_THROWS_AS(check_nested(d, DyadicGrid(Interval{0.0, 2.0})), std::domain_error);
}

TEST_CASE("closedness under stretching") {
  CHECK(check_closed_under_stretching(from_nodes({{1, 0}, {1, 1}})).holds);
  CHECK(check_closed_under_stretching(uniform(2, unit)).holds);
  CHECK(check_closed_under_stretching(from_nodes({{3, 0}, {3, 1}, {2, 1}, {1, 1}})).holds);
  // nodes {0, 1/4, 3/8, 1/2, 1}: 3/8 maps to 3/4, which is absent
  const CheckResult r = check_closed_under_stretching(from_nodes({{2, 0}, {3, 2}, {3, 3}, {1, 1}}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->intervals[0] == Interval{0.375, 0.375});
}

TEST_CASE("outputs derived from LGL grids") {
  for (double alpha : {1.0, 1.25}) {
    for (int n = 2; n <= 120; ++n) {
      const Grid g = lgl_grid(n).to_grid();
      const DyadicGrid d = dyadic_refine(g, DyadicGrid(), alpha);
      CHECK(check_monotone_symmetric(d.to_grid()));
      CHECK(check_graded(d).holds);
      const RatioBounds b = fresh_start_ratio_bounds(alpha, check_quasi_uniform(g));
      CHECK(check_equivalence(g, d.to_grid()).holds_for(b.lower * (1 - 1e-12), b.upper));
    }
  }
  CHECK(nested_ratio_bounds(1.0, 2.0).upper == 8.0);
  CHECK(fresh_start_ratio_bounds(2.0, 2.0).upper == 4.0);
  CHECK(fresh_start_ratio_bounds(0.5, 2.0).lower == 2.0);
}

TEST_CASE("serialization") {
  const DyadicGrid d = dyadic_refine(lgl_grid(9).to_grid(), DyadicGrid(), 1.0);
  const std::string json = dyadic_to_json(d);
  CHECK(dyadic_from_json(json) == d);
  CHECK(json.find("\"base\":[-1.0,1.0]") != std::string::npos);
  CHECK(dyadic_to_csv(from_nodes({{1, 0}, {1, 1}})) == "node\n0\n0.5\n1\n");
  CHECK_THROWS_AS(dyadic_from_json("{\"base\":[0,1],\"leaves\":[[1,0]]}"), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_from_json("{\"base\":[0,1]}"), std::invalid_argument);
}
