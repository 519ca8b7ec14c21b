// Command-line front end: grids, dyadic grids, verification campaigns and
// the grid-size tables.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgldyadic/campaign.hpp"
#include "lgldyadic/cgl.hpp"
#include "lgldyadic/dyadic.hpp"
#include "lgldyadic/dyadic_io.hpp"
#include "lgldyadic/lgl.hpp"
#include "lgldyadic/report.hpp"

namespace {

using namespace lgldyadic;

enum class Format { csv, json };

struct OutputOptions {
  Format format = Format::csv;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Interval parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--interval expects a,b");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string left = text.substr(0, comma);
    const std::string right = text.substr(comma + 1);
    const Interval i{std::stod(left, &used_a), std::stod(right, &used_b)};
    if (used_a != left.size() || used_b != right.size()) throw UsageError("--interval expects a,b");
    if (!(i.a < i.b)) throw UsageError("--interval needs a < b");
    return i;
  } catch (const std::logic_error&) {
    throw UsageError("--interval expects two numbers a,b");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
}

// Nodes of a grid with optional per-node detail columns.
struct NodeTable {
  std::vector<double> nodes;
  std::vector<double> angles;
  std::vector<double> lengths;
  std::vector<double> quotients;
};

std::string node_table_text(const NodeTable& t, bool details, Format format, int order, Interval interval) {
  const std::size_t n = t.nodes.size();
  if (format == Format::json) {
    nlohmann::json doc = {{"order", order}, {"interval", {interval.a, interval.b}}, {"nodes", t.nodes}};
    if (details) {
      doc["angles"] = t.angles;
      doc["lengths"] = t.lengths;
      doc["quotients"] = t.quotients;
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << (details ? "k,node,angle,length,quotient\n" : "k,node\n");
  for (std::size_t k = 0; k < n; ++k) {
    out << k << ',' << format_number(t.nodes[k]);
    if (details) {
      out << ',' << format_number(t.angles[k]) << ',';
      if (k < t.lengths.size()) out << format_number(t.lengths[k]);
      out << ',';
      if (k >= 1 && k - 1 < t.quotients.size()) out << format_number(t.quotients[k - 1]);
    }
    out << '\n';
  }
  return out.str();
}

std::string reports_csv_to_stdout(const std::vector<PropertyReport>& reports) {
  std::map<PropertyKind, std::vector<PropertyReport>> by_kind;
  for (const PropertyReport& r : reports) by_kind[r.property].push_back(r);
  std::string text;
  for (const auto& [kind, list] : by_kind) {
    if (!text.empty()) text += '\n';
    text += "# " + std::string(to_string(kind)) + '\n' + to_csv(list);
  }
  return text;
}

void write_reports(const std::vector<PropertyReport>& reports, const OutputOptions& opts) {
  if (opts.format == Format::json) {
    write_text(opts.out, to_json(reports));
    return;
  }
  if (opts.out.empty() || opts.out == "-") {
    std::cout << reports_csv_to_stdout(reports);
    return;
  }
  // one file per property kind inside the output directory
  std::filesystem::create_directories(opts.out);
  std::map<PropertyKind, std::vector<PropertyReport>> by_kind;
  for (const PropertyReport& r : reports) by_kind[r.property].push_back(r);
  for (const auto& [kind, list] : by_kind) {
    write_text((std::filesystem::path(opts.out) / (std::string(to_string(kind)) + ".csv")).string(), to_csv(list));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre- and Chebyshev-Gauss-Lobatto grids, associated dyadic grids and their properties"};
  app.require_subcommand(1);

  std::string interval_text = "-1,1";
  int order = 0;
  bool details = false;
  OutputOptions output;

  auto* lgl_cmd = app.add_subcommand("lgl", "LGL grid of order N");
  auto* cgl_cmd = app.add_subcommand("cgl", "CGL grid of order N");
  for (auto* cmd : {lgl_cmd, cgl_cmd}) {
    cmd->add_option("N", order, "order")->required();
    cmd->add_option("--interval", interval_text, "base interval a,b");
    cmd->add_flag("--details", details, "also print angles, cell lengths and quotients");
    add_output_options(cmd, output);
  }

  std::vector<double> alphas;
  bool nested = false;
  auto* dyadic_cmd = app.add_subcommand("dyadic", "dyadic grid associated with the LGL grid of order N");
  dyadic_cmd->add_option("N", order, "order")->required();
  dyadic_cmd->add_option("--alpha,--alphas", alphas, "refinement parameter")
      ->required()
      ->expected(1)
      ->check(CLI::PositiveNumber);
  dyadic_cmd->add_flag("--nested", nested, "member of the nested family instead of a fresh start");
  dyadic_cmd->add_option("--interval", interval_text, "base interval a,b");
  add_output_options(dyadic_cmd, output);

  CampaignConfig config;
  std::string properties = "all";
  std::string str_boundary = "strict";
  bool full = false;
  auto* verify_cmd = app.add_subcommand("verify", "check grid properties over orders 2..max-degree");
  verify_cmd->add_option("--properties", properties, "comma-separated property list, or all");
  auto* max_degree_opt = verify_cmd->add_option("--max-degree", config.max_degree, "largest order (default 500)");
  verify_cmd->add_flag("--full", full, "largest order 2000");
  verify_cmd->add_option("--alpha,--alphas", alphas, "refinement parameters (default 1,1.25)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--interval", interval_text, "base interval a,b");
  verify_cmd->add_option("--str-boundary", str_boundary, "strict or include")
      ->check(CLI::IsMember({"strict", "include"}));
  verify_cmd->add_flag("--timings", config.timings, "record runtime_ms (output is then not reproducible)");
  add_output_options(verify_cmd, output);

  int sizes_max = 500;
  auto* sizes_cmd = app.add_subcommand("sizes", "node counts of LGL, fresh-start dyadic and nested dyadic grids");
  sizes_cmd->add_option("--max-degree", sizes_max, "largest order (default 500)");
  sizes_cmd->add_flag("--full", full, "largest order 2000");
  sizes_cmd->add_option("--alpha,--alphas", alphas, "refinement parameters (default 1)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sizes_cmd->add_option("--interval", interval_text, "base interval a,b");
  add_output_options(sizes_cmd, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; usage errors share status 2
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Interval interval = parse_interval(interval_text);

    if (lgl_cmd->parsed()) {
      if (order < 1 || order > kMaxLglOrder) throw UsageError("N must lie in [1, 2000]");
      const LglGrid g = lgl_grid(order, interval);
      NodeTable t{{g.nodes().begin(), g.nodes().end()},
                  {g.angles().begin(), g.angles().end()},
                  {g.lengths().begin(), g.lengths().end()},
                  order >= 2 ? lgl_quotients(g) : std::vector<double>{}};
      write_text(output.out, node_table_text(t, details, output.format, order, interval));
      return 0;
    }
    if (cgl_cmd->parsed()) {
      if (order < 1) throw UsageError("N must be positive");
      const CglGrid g = cgl_grid(order, interval);
      NodeTable t{{g.nodes().begin(), g.nodes().end()},
                  {g.angles().begin(), g.angles().end()},
                  {g.lengths().begin(), g.lengths().end()},
                  cgl_quotients(g)};
      write_text(output.out, node_table_text(t, details, output.format, order, interval));
      return 0;
    }
    if (dyadic_cmd->parsed()) {
      if (order < 1 || order > kMaxLglOrder) throw UsageError("N must lie in [1, 2000]");
      const double alpha = alphas.front();
      DyadicGrid d(interval);
      if (nested) {
        for_each_nested_dyadic(
            order, alpha, [&](int n, const DyadicGrid& member) { if (n == order) d = member; }, interval);
      } else {
        d = dyadic_refine(lgl_grid(order, interval).to_grid(), DyadicGrid(interval), alpha);
      }
      write_text(output.out, output.format == Format::json ? dyadic_to_json(d) : dyadic_to_csv(d));
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (full && max_degree_opt->count() == 0) config.max_degree = kMaxLglOrder;
      if (!alphas.empty()) config.alphas = alphas;
      config.interval = interval;
      config.selectors = parse_selectors(properties);
      config.str_boundary = str_boundary == "include" ? StrBoundary::include_boundary_interval : StrBoundary::strict;
      config.validate();
      const std::vector<PropertyReport> reports = run_campaign(config);
      write_reports(reports, output);
      std::size_t failing = 0;
      for (const PropertyReport& r : reports) failing += r.asserted && r.verdict == Verdict::fails;
      std::cerr << reports.size() << " reports, " << failing << " asserted failures\n";
      return campaign_passes(reports) ? 0 : 1;
    }
    if (sizes_cmd->parsed()) {
      if (full && sizes_cmd->get_option("--max-degree")->count() == 0) sizes_max = kMaxLglOrder;
      if (alphas.empty()) alphas = {1.0};
      const std::vector<SizeRow> rows = compute_sizes(sizes_max, alphas, interval);
      write_text(output.out, output.format == Format::json ? sizes_to_json(rows) : sizes_to_csv(rows));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
