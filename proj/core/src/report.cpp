#include "lgldyadic/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

namespace lgldyadic {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<PropertyKind, std::string_view>, 16> kKindNames{{
    {PropertyKind::quasi_uniform, "quasi_uniform"},
    {PropertyKind::mq, "mq"},
    {PropertyKind::str, "str"},
    {PropertyKind::displacement, "displacement"},
    {PropertyKind::equivalence, "equivalence"},
    {PropertyKind::graded, "graded"},
    {PropertyKind::nested, "nested"},
    {PropertyKind::stretch_closed, "stretch_closed"},
    {PropertyKind::convexity_condition, "convexity_condition"},
    {PropertyKind::length_bounds, "length_bounds"},
    {PropertyKind::angle_bounds, "angle_bounds"},
    {PropertyKind::limit_gap, "limit_gap"},
    {PropertyKind::cardinality, "cardinality"},
    {PropertyKind::monotone_symmetric, "monotone_symmetric"},
    {PropertyKind::interlacing, "interlacing"},
    {PropertyKind::node_residual, "node_residual"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 3> kVerdictNames{{
    {Verdict::holds, "holds"},
    {Verdict::fails, "fails"},
    {Verdict::reported, "reported"},
}};

void require_serializable(const PropertyReport& r) {
  if (r.verdict == Verdict::fails && !r.witness) {
    throw std::invalid_argument("a failing report must carry a witness");
  }
  const auto finite = [](double v) { return std::isfinite(v); };
  for (const auto& [name, value] : r.realized_constants) {
    if (!finite(value)) throw std::invalid_argument("realized constant '" + name + "' is not finite");
  }
  if (r.alpha && !finite(*r.alpha)) throw std::invalid_argument("alpha is not finite");
  if (r.witness) {
    for (const Interval& i : r.witness->intervals) {
      if (!finite(i.a) || !finite(i.b)) throw std::invalid_argument("witness interval is not finite");
    }
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json witness_to_json(const Witness& w) {
  json intervals = json::array();
  for (const Interval& i : w.intervals) intervals.push_back({i.a, i.b});
  return {{"indices", w.indices}, {"intervals", intervals}, {"note", w.note}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.indices = j.at("indices").get<std::vector<std::int64_t>>();
  for (const json& i : j.at("intervals")) {
    if (!i.is_array() || i.size() != 2) throw std::invalid_argument("witness interval must be [a, b]");
    w.intervals.push_back({i[0].get<double>(), i[1].get<double>()});
  }
  w.note = j.at("note").get<std::string>();
  return w;
}

}  // namespace

std::string_view to_string(PropertyKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  throw std::logic_error("unnamed property kind");
}

std::string_view to_string(Verdict verdict) {
  for (const auto& [v, name] : kVerdictNames) {
    if (v == verdict) return name;
  }
  throw std::logic_error("unnamed verdict");
}

PropertyKind property_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

Verdict verdict_from_string(std::string_view name) {
  for (const auto& [v, n] : kVerdictNames) {
    if (n == name) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

bool report_less(const PropertyReport& x, const PropertyReport& y) {
  const auto key = [](const PropertyReport& r) {
    return std::make_tuple(static_cast<int>(r.property), std::cref(r.subject), r.alpha.value_or(0.0),
                           r.degree, r.degree2.value_or(0));
  };
  return key(x) < key(y);
}

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::logic_error("number formatting failed");
  return std::string(buf.data(), end);
}

std::string to_csv(const std::vector<PropertyReport>& reports) {
  std::set<std::string> names;
  for (const PropertyReport& r : reports) {
    if (r.property != reports.front().property) {
      throw std::domain_error("CSV output needs a single property kind");
    }
    require_serializable(r);
    for (const auto& [name, value] : r.realized_constants) names.insert(name);
  }

  std::ostringstream out;
  out << "property,subject,degree,degree2,alpha,verdict,asserted";
  for (const std::string& name : names) out << ',' << csv_field(name);
  out << ",witness_indices,witness_intervals,witness_note,runtime_ms\n";

  for (const PropertyReport& r : reports) {
    out << to_string(r.property) << ',' << csv_field(r.subject) << ',' << r.degree << ',';
    if (r.degree2) out << *r.degree2;
    out << ',';
    if (r.alpha) out << format_number(*r.alpha);
    out << ',' << to_string(r.verdict) << ',' << (r.asserted ? "true" : "false");
    for (const std::string& name : names) {
      out << ',';
      if (auto it = r.realized_constants.find(name); it != r.realized_constants.end()) {
        out << format_number(it->second);
      }
    }
    std::string indices, intervals, note;
    if (r.witness) {
      for (std::size_t i = 0; i < r.witness->indices.size(); ++i) {
        if (i) indices += ';';
        indices += std::to_string(r.witness->indices[i]);
      }
      for (std::size_t i = 0; i < r.witness->intervals.size(); ++i) {
        if (i) intervals += ';';
        intervals += format_number(r.witness->intervals[i].a) + ':' + format_number(r.witness->intervals[i].b);
      }
      note = r.witness->note;
    }
    out << ',' << indices << ',' << intervals << ',' << csv_field(note) << ',' << r.runtime_ms << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<PropertyReport>& reports) {
  json list = json::array();
  for (const PropertyReport& r : reports) {
    require_serializable(r);
    json realized = json::object();
    for (const auto& [name, value] : r.realized_constants) realized[name] = value;
    list.push_back({
        {"property", to_string(r.property)},
        {"subject", r.subject},
        {"degree", r.degree},
        {"degree2", r.degree2 ? json(*r.degree2) : json(nullptr)},
        {"alpha", r.alpha ? json(*r.alpha) : json(nullptr)},
        {"verdict", to_string(r.verdict)},
        {"asserted", r.asserted},
        {"realized", realized},
        {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)},
        {"runtime_ms", r.runtime_ms},
    });
  }
  const json doc = {{"schema_version", kReportSchemaVersion}, {"reports", list}};
  return doc.dump(2) + "\n";
}

std::vector<PropertyReport> reports_from_json(std::string_view text) {
  std::vector<PropertyReport> reports;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw std::invalid_argument("unsupported report schema version");
    }
    for (const json& j : doc.at("reports")) {
      PropertyReport r;
      r.property = property_kind_from_string(j.at("property").get<std::string>());
      r.subject = j.at("subject").get<std::string>();
      r.degree = j.at("degree").get<int>();
      if (!j.at("degree2").is_null()) r.degree2 = j.at("degree2").get<int>();
      if (!j.at("alpha").is_null()) r.alpha = j.at("alpha").get<double>();
      r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
      r.asserted = j.at("asserted").get<bool>();
      for (const auto& [name, value] : j.at("realized").items()) r.realized_constants[name] = value.get<double>();
      if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
      r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
      reports.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  return reports;
}

}  // namespace lgldyadic
