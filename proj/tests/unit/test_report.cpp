#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lgldyadic/asymptotics.hpp"
#include "lgldyadic/campaign.hpp"
#include "lgldyadic/lgl.hpp"
#include "lgldyadic/report.hpp"

using namespace lgldyadic;

namespace {

PropertyReport limit_row() {
  const LglGrid g = lgl_grid(2000);
  PropertyReport r;
  r.property = PropertyKind::limit_gap;
  r.subject = "lgl";
  r.degree = 2000;
  r.verdict = Verdict::reported;
  r.asserted = false;
  r.realized_constants["q1"] = lgl_quotients(g)[0];
  r.realized_constants["gap_q1"] = limit_gap(g, 1);
  return r;
}

PropertyReport failing_nested() {
  PropertyReport r;
  r.property = PropertyKind::nested;
  r.subject = "standalone_dyadic";
  r.degree = 19;
  r.degree2 = 20;
  r.alpha = 1.0;
  r.verdict = Verdict::fails;
  r.asserted = false;
  r.realized_constants["missing"] = 2;
  r.witness = Witness{{5, 3}, {{-0.90625, -0.90625}}, "node of the coarse grid, absent from the fine"};
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (PropertyKind k : {PropertyKind::quasi_uniform, PropertyKind::str, PropertyKind::node_residual}) {
    CHECK(property_kind_from_string(to_string(k)) == k);
  }
  CHECK(verdict_from_string("reported") == Verdict::reported);
  CHECK_THROWS_AS(property_kind_from_string("Str"), std::invalid_argument);
  CHECK_THROWS_AS(verdict_from_string(""), std::invalid_argument);
}

TEST_CASE("numbers use the shortest round-trip form") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-1.0) == "-1");
  CHECK(format_number(2.352303456118672) == "2.352303456118672");
  const double x = std::nextafter(1.0, 2.0);
  CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("CSV rows") {
  const PropertyReport r = limit_row();
  const auto rows = lines(to_csv({r}));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] ==
        "property,subject,degree,degree2,alpha,verdict,asserted,gap_q1,q1,witness_indices,witness_intervals,"
        "witness_note,runtime_ms");
  CHECK(rows[1].find(format_number(r.realized_constants.at("q1"))) != std::string::npos);
  CHECK(rows[1].starts_with("limit_gap,lgl,2000,,,reported,false,"));
  CHECK(std::abs(r.realized_constants.at("q1") - 2.352303456118672) < 1e-12);

  const auto fail = lines(to_csv({failing_nested()}));
  CHECK(fail[1] ==
        "nested,standalone_dyadic,19,20,1,fails,false,2,5;3,-0.90625:-0.90625,"
        "\"node of the coarse grid, absent from the fine\",0");
}

TEST_CASE("CSV of nothing is the bare header") {
  CHECK(to_csv({}) ==
        "property,subject,degree,degree2,alpha,verdict,asserted,witness_indices,witness_intervals,witness_note,"
        "runtime_ms\n");
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(to_csv({limit_row(), failing_nested()}), std::domain_error);

  PropertyReport bare = failing_nested();
  bare.witness.reset();
  CHECK_THROWS_AS(to_csv({bare}), std::invalid_argument);
  CHECK_THROWS_AS(to_json({bare}), std::invalid_argument);

  PropertyReport nan = limit_row();
  nan.realized_constants["q1"] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(to_csv({nan}), std::invalid_argument);
  CHECK_THROWS_AS(to_json({nan}), std::invalid_argument);

  CHECK_THROWS_AS(reports_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(reports_from_json("{\"schema_version\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(reports_from_json("{\"schema_version\":2,\"reports\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(reports_from_json("{"), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
  const std::vector<PropertyReport> reports{limit_row(), failing_nested()};
  const std::string json = to_json(reports);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"verdict\": \"fails\"") != std::string::npos);
  CHECK(reports_from_json(json) == reports);
}

TEST_CASE("CSV and JSON carry identical values") {
  CampaignConfig config;
  config.max_degree = 40;
  config.selectors = parse_selectors("quasi_uniform");
  config.threads = 1;
  const auto reports = run_campaign(config);
  const auto parsed = reports_from_json(to_json(reports));
  REQUIRE(parsed == reports);
  const std::string csv = to_csv(reports);
  for (const PropertyReport& r : reports) {
    for (const auto& [name, value] : r.realized_constants) {
      CHECK(csv.find(format_number(value)) != std::string::npos);
    }
  }
}

TEST_CASE("size tables") {
  const auto rows = compute_sizes(100, {1.0}, kReferenceInterval, 1);
  CHECK(lines(sizes_to_csv(rows)).size() == 101);
  CHECK(lines(sizes_to_csv(rows))[0] == "alpha,N,lgl_nodes,standalone_dyadic_nodes,nested_dyadic_nodes");
  CHECK(lines(sizes_to_csv(rows))[2] == "1,2,3,3,3");
  CHECK(sizes_to_json(rows).find("\"schema_version\"") != std::string::npos);
}
