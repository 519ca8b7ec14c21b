#pragma once

#include <string>
#include <string_view>

#include "lgldyadic/dyadic.hpp"

namespace lgldyadic {

/// {"base": [a, b], "leaves": [[level, index], ...], "nodes": [...]}.
/// The nodes are the realized leaf endpoints and are ignored when reading.
std::string dyadic_to_json(const DyadicGrid& grid);

/// std::invalid_argument on malformed input or leaves that do not tile.
DyadicGrid dyadic_from_json(std::string_view text);

/// A `node` header and one realized node per line.
std::string dyadic_to_csv(const DyadicGrid& grid);

}  // namespace lgldyadic
