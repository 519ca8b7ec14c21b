#include "lgldyadic/dyadic_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "lgldyadic/report.hpp"

namespace lgldyadic {

using nlohmann::json;

std::string dyadic_to_json(const DyadicGrid& grid) {
  json leaves = json::array();
  for (const DyadicInterval& leaf : grid.leaves()) leaves.push_back({leaf.level, leaf.index});
  const json doc = {
      {"base", {grid.base().a, grid.base().b}},
      {"leaves", leaves},
      {"nodes", grid.nodes()},
  };
  return doc.dump() + "\n";
}

DyadicGrid dyadic_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const json& base = doc.at("base");
    if (!base.is_array() || base.size() != 2) throw std::invalid_argument("base must be [a, b]");
    std::vector<DyadicInterval> leaves;
    for (const json& leaf : doc.at("leaves")) {
      if (!leaf.is_array() || leaf.size() != 2) throw std::invalid_argument("leaf must be [level, index]");
      leaves.push_back({leaf[0].get<int>(), leaf[1].get<std::int64_t>()});
    }
    return DyadicGrid({base[0].get<double>(), base[1].get<double>()}, std::move(leaves));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed dyadic grid JSON: ") + e.what());
  }
}

std::string dyadic_to_csv(const DyadicGrid& grid) {
  std::string out = "node\n";
  for (double x : grid.nodes()) out += format_number(x) + '\n';
  return out;
}

}  // namespace lgldyadic
