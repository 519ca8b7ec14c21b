#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "lgldyadic/campaign.hpp"

using namespace lgldyadic;

TEST_CASE("selectors") {
  CHECK(parse_selectors("all") == all_selectors());
  CHECK(parse_selectors("mq,str") == std::vector<Selector>{Selector::mq, Selector::str});
  CHECK(to_string(Selector::nested_standalone) == "nested_standalone");
  CHECK_THROWS_AS(parse_selectors("mq,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_selectors(""), std::invalid_argument);
}

TEST_CASE("configuration checks") {
  CampaignConfig c;
  CHECK_NOTHROW(c.validate());
  c.max_degree = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.max_degree = 2001;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.max_degree = 10;
  c.alphas = {1.0, 0.0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(campaign_threads(3) == 3);
  CHECK(campaign_threads(0) >= 1);
}

TEST_CASE("small campaign passes and is independent of the thread count") {
  CampaignConfig c;
  c.max_degree = 60;
  c.alphas = {0.5, 1.0, 1.25, 2.0};
  c.threads = 1;
  const auto serial = run_campaign(c);
  CHECK(campaign_passes(serial));
  CHECK(std::is_sorted(serial.begin(), serial.end(), report_less));
  c.threads = 4;
  CHECK(run_campaign(c) == serial);

  const auto nested = std::find_if(serial.begin(), serial.end(), [](const PropertyReport& r) {
    return r.property == PropertyKind::nested && r.subject == "standalone_dyadic" && r.degree == 19 &&
           r.alpha == 1.0;
  });
  REQUIRE(nested != serial.end());
  CHECK(nested->verdict == Verdict::fails);
  CHECK_FALSE(nested->asserted);
}

TEST_CASE("an asserted failure fails the campaign") {
  CampaignConfig c;
  c.max_degree = 20;
  c.selectors = {Selector::str};
  c.str_boundary = StrBoundary::include_boundary_interval;
  CHECK_FALSE(campaign_passes(run_campaign(c)));
}

TEST_CASE("sizes") {
  const auto rows = compute_sizes(40, {1.0, 64.0}, kReferenceInterval, 2);
  REQUIRE(rows.size() == 80);
  CHECK(rows[1] == SizeRow{1.0, 2, 3, 3, 3});
  CHECK(rows[49].order == 10);
  CHECK(rows[49].alpha == 64.0);
  CHECK(rows[49].standalone_nodes == 2);
  CHECK(compute_sizes(40, {1.0, 64.0}, kReferenceInterval, 1) == rows);
  for (const SizeRow& r : rows) {
    CHECK(r.lgl_nodes == static_cast<std::size_t>(r.order + 1));
    CHECK(r.nested_nodes >= r.standalone_nodes);
  }
}

TEST_CASE("larger alpha never gives more nodes") {
  const auto coarse = compute_sizes(200, {1.0, 1.25, 2.0}, kReferenceInterval, 0);
  for (int n = 0; n < 200; ++n) {
    CHECK(coarse[n].standalone_nodes >= coarse[200 + n].standalone_nodes);
    CHECK(coarse[200 + n].standalone_nodes >= coarse[400 + n].standalone_nodes);
    CHECK(coarse[n].nested_nodes >= coarse[200 + n].nested_nodes);
    CHECK(coarse[200 + n].nested_nodes >= coarse[400 + n].nested_nodes);
  }
}
