#include "lgldyadic/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "lgldyadic/asymptotics.hpp"
#include "lgldyadic/cgl.hpp"
#include "lgldyadic/dyadic.hpp"
#include "lgldyadic/lgl.hpp"
#include "lgldyadic/lgl_checks.hpp"

namespace lgldyadic {
namespace {

constexpr std::array<std::pair<Selector, std::string_view>, 17> kSelectorNames{{
    {Selector::quasi_uniform, "quasi_uniform"},
    {Selector::mq, "mq"},
    {Selector::str, "str"},
    {Selector::displacement, "displacement"},
    {Selector::equivalence, "equivalence"},
    {Selector::graded, "graded"},
    {Selector::nested, "nested"},
    {Selector::nested_standalone, "nested_standalone"},
    {Selector::stretch_closed, "stretch_closed"},
    {Selector::convexity_condition, "convexity_condition"},
    {Selector::length_bounds, "length_bounds"},
    {Selector::angle_bounds, "angle_bounds"},
    {Selector::limit_gap, "limit_gap"},
    {Selector::cardinality, "cardinality"},
    {Selector::monotone_symmetric, "monotone_symmetric"},
    {Selector::interlacing, "interlacing"},
    {Selector::node_residual, "node_residual"},
}};

constexpr double kLglQuasiUniformBound = 7.0 * std::numbers::pi * std::numbers::pi / 4.0;
constexpr double kNodeResidualBound = 1e-11;
constexpr double kCglLengthBound = 1e-14;
constexpr double kRatioTolerance = 1e-12;

using Reports = std::vector<PropertyReport>;
using Task = std::function<void(Reports&)>;

// Gradedness is only claimed for this range of alpha.
bool graded_alpha(double alpha) { return alpha >= 1.0 && alpha <= 1.25; }

PropertyReport make(PropertyKind kind, std::string subject, int degree) {
  PropertyReport r;
  r.property = kind;
  r.subject = std::move(subject);
  r.degree = degree;
  return r;
}

PropertyReport from_check(PropertyKind kind, std::string subject, int degree, const CheckResult& check,
                          const char* constant) {
  PropertyReport r = make(kind, std::move(subject), degree);
  r.verdict = check.holds ? Verdict::holds : Verdict::fails;
  r.witness = check.witness;
  r.realized_constants[constant] = check.realized;
  return r;
}

// Witness for a predicate that only answers yes or no.
PropertyReport from_flag(PropertyKind kind, std::string subject, int degree, bool holds, const char* note) {
  PropertyReport r = make(kind, std::move(subject), degree);
  r.verdict = holds ? Verdict::holds : Verdict::fails;
  if (!holds) r.witness = Witness{{degree}, {}, note};
  return r;
}

void run_parallel(std::vector<Task>& tasks, std::vector<Reports>& out, int threads, bool timings) {
  out.assign(tasks.size(), {});
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        tasks[i](out[i]);
        if (timings) {
          const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
          for (PropertyReport& r : out[i]) r.runtime_ms = ms;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

class CampaignBuilder {
 public:
  explicit CampaignBuilder(const CampaignConfig& config) : config_(config) {
    for (Selector s : config.selectors) selected_[static_cast<std::size_t>(s)] = true;
  }

  std::vector<Task> tasks() {
    std::vector<Task> out;
    // the long sequential family runs go first so they overlap the rest
    if (any({Selector::nested, Selector::graded, Selector::stretch_closed, Selector::monotone_symmetric,
             Selector::quasi_uniform, Selector::equivalence, Selector::cardinality})) {
      for (double alpha : config_.alphas) out.push_back([this, alpha](Reports& r) { family(alpha, r); });
    }
    for (int n = 2; n <= config_.max_degree; ++n) {
      out.push_back([this, n](Reports& r) { single_order(n, r); });
      if (any({Selector::equivalence, Selector::graded, Selector::monotone_symmetric,
               Selector::nested_standalone})) {
        for (double alpha : config_.alphas) {
          out.push_back([this, n, alpha](Reports& r) { standalone(n, alpha, r); });
        }
      }
    }
    return out;
  }

 private:
  bool on(Selector s) const { return selected_[static_cast<std::size_t>(s)]; }
  bool any(std::initializer_list<Selector> list) const {
    return std::any_of(list.begin(), list.end(), [this](Selector s) { return on(s); });
  }
  Interval base() const { return config_.interval; }

  void single_order(int n, Reports& out) const {
    const LglGrid lgl = lgl_grid(n, base());
    const Grid lgl_g = lgl.to_grid();
    const CglGrid cgl = cgl_grid(n, base());

    if (on(Selector::quasi_uniform)) {
      const double cg = check_quasi_uniform(lgl_g);
      const bool holds = cg <= kLglQuasiUniformBound && cg <= qhat(1) + 1e-6;
      PropertyReport r = from_flag(PropertyKind::quasi_uniform, "lgl", n, holds,
                                   "quasi-uniformity constant above its bound");
      r.realized_constants = {{"c_g", cg}, {"bound", kLglQuasiUniformBound}, {"limit_bound", qhat(1) + 1e-6}};
      out.push_back(std::move(r));
      out.push_back(from_check(PropertyKind::quasi_uniform, "cgl", n, check_cgl_quasi_uniform(cgl), "c_g"));
    }
    if (on(Selector::mq)) {
      const CheckResult in_k = check_mq_decreasing_in_k(lgl);
      PropertyReport r = from_check(PropertyKind::mq, "lgl", n, in_k, "min_margin_in_k");
      if (n + 1 <= config_.max_degree) {
        const CheckResult in_order = check_mq_increasing_in_order(lgl, lgl_grid(n + 1, base()));
        r.degree2 = n + 1;
        r.realized_constants["min_margin_in_order"] = in_order.realized;
        if (!in_order.holds && r.verdict == Verdict::holds) {
          r.verdict = Verdict::fails;
          r.witness = in_order.witness;
        }
      }
      out.push_back(std::move(r));
    }
    if (on(Selector::str)) {
      out.push_back(from_check(PropertyKind::str, "lgl", n, check_str(lgl_g, config_.str_boundary), "min_margin"));
    }
    if (on(Selector::displacement)) {
      for (int m : {n + 1, 2 * n}) {
        if (m > config_.max_degree) continue;
        PropertyReport r = from_check(PropertyKind::displacement, "lgl", n,
                                      check_displacement(lgl, lgl_grid(m, base())), "min_margin");
        r.degree2 = m;
        out.push_back(std::move(r));
        PropertyReport c = from_check(PropertyKind::displacement, "cgl", n,
                                      check_cgl_displacement(cgl, cgl_grid(m, base())), "min_margin");
        c.degree2 = m;
        out.push_back(std::move(c));
      }
    }
    if (on(Selector::convexity_condition) && n >= 5) {
      out.push_back(from_check(PropertyKind::convexity_condition, "lgl", n, check_convexity_condition(lgl),
                               "min_margin"));
    }
    if (on(Selector::length_bounds) && n >= 3) {
      out.push_back(from_check(PropertyKind::length_bounds, "lgl", n, check_length_sandwich(lgl), "min_slack"));
    }
    if (on(Selector::angle_bounds)) {
      out.push_back(from_check(PropertyKind::angle_bounds, "lgl", n, check_angle_sandwich(lgl), "min_slack"));
    }
    if (on(Selector::node_residual)) {
      double worst = 0.0;
      int where = 1;
      for (int k = 1; k < n; ++k) {
        const double res = lgl_node_residual(lgl, k);
        if (res > worst) {
          worst = res;
          where = k;
        }
      }
      PropertyReport r = make(PropertyKind::node_residual, "lgl", n);
      r.realized_constants = {{"max_residual", worst}, {"bound", kNodeResidualBound}};
      if (worst > kNodeResidualBound) {
        r.verdict = Verdict::fails;
        r.witness = Witness{{n, where}, {}, "node residual above bound"};
      }
      out.push_back(std::move(r));
    }
    if (on(Selector::interlacing)) {
      const CheckResult inter = check_interlacing(lgl, cgl);
      const CheckResult contained = check_lgl_in_cgl_cells(lgl, cgl);
      const double discrepancy = cgl_length_discrepancy(cgl);
      const LengthRatioEnvelope env = lgl_cgl_length_ratios(lgl, cgl);
      PropertyReport r = from_check(PropertyKind::interlacing, "lgl_cgl", n, inter, "interlacing_slack");
      r.realized_constants["containment_slack"] = contained.realized;
      r.realized_constants["cgl_length_discrepancy"] = discrepancy;
      r.realized_constants["min_length_ratio"] = env.min_ratio;
      r.realized_constants["max_length_ratio"] = env.max_ratio;
      if (r.verdict == Verdict::holds && !contained.holds) {
        r.verdict = Verdict::fails;
        r.witness = contained.witness;
      }
      if (r.verdict == Verdict::holds && discrepancy > kCglLengthBound) {
        r.verdict = Verdict::fails;
        r.witness = Witness{{n}, {}, "closed-form CGL length differs from node difference"};
      }
      out.push_back(std::move(r));
    }
    if (on(Selector::monotone_symmetric)) {
      out.push_back(from_flag(PropertyKind::monotone_symmetric, "lgl", n, check_monotone_symmetric(lgl_g),
                              "LGL grid not monotone-symmetric"));
      out.push_back(from_flag(PropertyKind::monotone_symmetric, "cgl", n,
                              check_monotone_symmetric(cgl.to_grid()) && check_cgl_monotone(cgl).holds,
                              "CGL grid not monotone-symmetric"));
    }
    if (on(Selector::limit_gap) && n >= 3) {
      PropertyReport r = make(PropertyKind::limit_gap, "lgl", n);
      r.verdict = Verdict::reported;
      r.asserted = false;
      const std::vector<double> q = lgl_quotients(lgl);
      r.realized_constants["q1"] = q[0];
      r.realized_constants["gap_q1"] = limit_gap(lgl, 1);
      r.realized_constants["gap_eta1"] = angle_limit_gap(lgl, 1);
      if (n >= 4) {
        r.realized_constants["q2"] = q[1];
        r.realized_constants["gap_q2"] = limit_gap(lgl, 2);
      }
      out.push_back(std::move(r));
    }
    if (on(Selector::equivalence)) {
      // pairs of orders within a factor two; bounded but without a stated constant
      const int m = (n + 1) / 2;
      const EquivalenceReport lgl_pair = check_equivalence(lgl_g, lgl_grid(m, base()).to_grid());
      const EquivalenceReport cgl_pair = check_equivalence(cgl.to_grid(), cgl_grid(m, base()).to_grid());
      for (auto [subject, eq] : {std::pair{"lgl_pair", lgl_pair}, std::pair{"cgl_pair", cgl_pair}}) {
        PropertyReport r = make(PropertyKind::equivalence, subject, n);
        r.degree2 = m;
        r.verdict = Verdict::reported;
        r.asserted = false;
        r.realized_constants = {{"min_ratio", eq.min_ratio}, {"max_ratio", eq.max_ratio}};
        out.push_back(std::move(r));
      }
    }
  }

  // |Delta| / |D| against the admissible range; both grids on one base.
  static PropertyReport equivalence_report(const Grid& lgl, const DyadicGrid& d, RatioBounds bounds,
                                           const char* subject, int n) {
    const Grid dg = d.to_grid();
    const EquivalenceReport eq = check_equivalence(lgl, dg);
    PropertyReport r = make(PropertyKind::equivalence, subject, n);
    r.realized_constants = {{"min_ratio", eq.min_ratio},
                            {"max_ratio", eq.max_ratio},
                            {"lower_bound", bounds.lower},
                            {"upper_bound", bounds.upper}};
    const bool low_ok = eq.min_ratio >= bounds.lower * (1.0 - kRatioTolerance);
    const bool high_ok = eq.max_ratio <= bounds.upper * (1.0 + kRatioTolerance);
    if (!low_ok || !high_ok) {
      const auto [i, j] = low_ok ? eq.witness_max : eq.witness_min;
      r.verdict = Verdict::fails;
      r.witness = Witness{{i, j}, {lgl.cell(i), dg.cell(j)}, low_ok ? "ratio above upper bound" : "ratio below 1/alpha"};
    }
    return r;
  }

  void standalone(int n, double alpha, Reports& out) const {
    const Grid lgl = lgl_grid(n, base()).to_grid();
    const DyadicGrid d = dyadic_refine(lgl, DyadicGrid(base()), alpha);
    auto tag = [&](PropertyReport r) {
      r.alpha = alpha;
      out.push_back(std::move(r));
    };
    if (on(Selector::equivalence)) {
      PropertyReport r = equivalence_report(lgl, d, fresh_start_ratio_bounds(alpha, check_quasi_uniform(lgl)),
                                            "standalone_dyadic", n);
      r.realized_constants["max_level"] = d.max_level();
      r.realized_constants["max_level_bound"] = max_level_bound(lgl, alpha);
      tag(std::move(r));
    }
    if (on(Selector::graded)) {
      PropertyReport r = from_check(PropertyKind::graded, "standalone_dyadic", n, check_graded(d), "max_level_jump");
      r.asserted = graded_alpha(alpha);
      tag(std::move(r));
    }
    if (on(Selector::monotone_symmetric)) {
      tag(from_flag(PropertyKind::monotone_symmetric, "standalone_dyadic", n, check_monotone_symmetric(d.to_grid()),
                    "dyadic grid not monotone-symmetric"));
    }
    if (on(Selector::nested_standalone)) {
      const DyadicGrid prev = dyadic_refine(lgl_grid(n - 1, base()).to_grid(), DyadicGrid(base()), alpha);
      PropertyReport r = from_check(PropertyKind::nested, "standalone_dyadic", n - 1, check_nested(prev, d),
                                    "missing_nodes");
      r.degree2 = n;
      r.asserted = false;
      tag(std::move(r));
    }
  }

  void family(double alpha, Reports& out) const {
    std::optional<DyadicGrid> prev;
    for_each_nested_dyadic(
        config_.max_degree, alpha,
        [&](int n, const DyadicGrid& d) {
          if (n >= 2) family_member(n, alpha, *prev, d, out);
          prev = d;
        },
        base());
  }

  void family_member(int n, double alpha, const DyadicGrid& prev, const DyadicGrid& d, Reports& out) const {
    auto tag = [&](PropertyReport r) {
      r.alpha = alpha;
      out.push_back(std::move(r));
    };
    const Grid lgl = lgl_grid(n, base()).to_grid();
    if (on(Selector::nested)) {
      PropertyReport r = from_check(PropertyKind::nested, "nested_dyadic", n - 1, check_nested(prev, d), "missing_nodes");
      r.degree2 = n;
      tag(std::move(r));
    }
    if (on(Selector::graded)) {
      PropertyReport r = from_check(PropertyKind::graded, "nested_dyadic", n, check_graded(d), "max_level_jump");
      r.asserted = graded_alpha(alpha);
      tag(std::move(r));
    }
    if (on(Selector::stretch_closed)) {
      tag(from_check(PropertyKind::stretch_closed, "nested_dyadic", n, check_closed_under_stretching(d),
                     "missing_nodes"));
    }
    if (on(Selector::monotone_symmetric)) {
      tag(from_flag(PropertyKind::monotone_symmetric, "nested_dyadic", n, check_monotone_symmetric(d.to_grid()),
                    "dyadic grid not monotone-symmetric"));
    }
    if (on(Selector::quasi_uniform)) {
      const double c = check_quasi_uniform(d.to_grid());
      PropertyReport r = from_flag(PropertyKind::quasi_uniform, "nested_dyadic", n, std::isfinite(c),
                                   "quasi-uniformity constant not finite");
      r.realized_constants["c_g"] = std::isfinite(c) ? c : 0.0;
      tag(std::move(r));
    }
    if (on(Selector::equivalence)) {
      tag(equivalence_report(lgl, d, nested_ratio_bounds(alpha, check_quasi_uniform(lgl)), "nested_dyadic", n));
    }
    if (on(Selector::cardinality)) {
      const double ratio = static_cast<double>(d.node_count()) / (n + 1);
      const std::size_t fresh = dyadic_refine(lgl, DyadicGrid(base()), alpha).node_count();
      const bool holds = ratio >= 0.25 && ratio <= 4.0;
      PropertyReport r = from_flag(PropertyKind::cardinality, "nested_dyadic", n, holds,
                                   "node count ratio outside [1/4, 4]");
      r.realized_constants = {{"lgl_nodes", static_cast<double>(n + 1)},
                              {"standalone_nodes", static_cast<double>(fresh)},
                              {"nested_nodes", static_cast<double>(d.node_count())},
                              {"ratio", ratio}};
      // the envelope is only asserted at alpha = 1
      r.asserted = alpha == 1.0;
      if (!r.asserted && holds) r.verdict = Verdict::reported;
      tag(std::move(r));
    }
  }

  const CampaignConfig& config_;
  std::array<bool, kSelectorNames.size()> selected_{};
};

}  // namespace

std::string_view to_string(Selector selector) {
  for (const auto& [s, name] : kSelectorNames) {
    if (s == selector) return name;
  }
  throw std::logic_error("unnamed selector");
}

std::vector<Selector> all_selectors() {
  std::vector<Selector> out;
  for (const auto& [s, name] : kSelectorNames) out.push_back(s);
  return out;
}

std::vector<Selector> parse_selectors(std::string_view list) {
  if (list == "all") return all_selectors();
  std::vector<Selector> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, comma - start);
    const auto it = std::find_if(kSelectorNames.begin(), kSelectorNames.end(),
                                 [&](const auto& entry) { return entry.second == name; });
    if (it == kSelectorNames.end()) throw std::invalid_argument("unknown property '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), it->first) == out.end()) out.push_back(it->first);
    start = comma + 1;
  }
  return out;
}

void CampaignConfig::validate() const {
  if (max_degree < 2 || max_degree > kMaxLglOrder) {
    throw std::invalid_argument("max degree must lie in [2, " + std::to_string(kMaxLglOrder) + "]");
  }
  if (alphas.empty()) throw std::invalid_argument("at least one alpha is needed");
  for (double alpha : alphas) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
  }
  if (!(interval.a < interval.b)) throw std::invalid_argument("interval must satisfy a < b");
}

int campaign_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LGL_DYADIC_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PropertyReport> run_campaign(const CampaignConfig& config) {
  config.validate();
  CampaignBuilder builder(config);
  std::vector<Task> tasks = builder.tasks();
  std::vector<Reports> parts;
  run_parallel(tasks, parts, campaign_threads(config.threads), config.timings);
  Reports reports;
  for (Reports& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(reports));
  }
  std::stable_sort(reports.begin(), reports.end(), report_less);
  return reports;
}

bool campaign_passes(const std::vector<PropertyReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const PropertyReport& r) {
    return r.asserted && r.verdict == Verdict::fails;
  });
}

std::vector<SizeRow> compute_sizes(int max_degree, const std::vector<double>& alphas, Interval interval,
                                   int threads) {
  if (max_degree < 1 || max_degree > kMaxLglOrder) throw std::invalid_argument("max degree out of range");
  for (double alpha : alphas) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
  }
  std::vector<std::vector<SizeRow>> per_alpha(alphas.size());
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    tasks.push_back([&, i](Reports&) {
      const double alpha = alphas[i];
      for_each_nested_dyadic(
          max_degree, alpha,
          [&](int n, const DyadicGrid& d) {
            const Grid lgl = lgl_grid(n, interval).to_grid();
            per_alpha[i].push_back({alpha, n, static_cast<std::size_t>(n + 1),
                                    dyadic_refine(lgl, DyadicGrid(interval), alpha).node_count(), d.node_count()});
          },
          interval);
    });
  }
  std::vector<Reports> unused;
  run_parallel(tasks, unused, campaign_threads(threads), false);
  std::vector<SizeRow> rows;
  for (auto& part : per_alpha) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

std::string sizes_to_csv(const std::vector<SizeRow>& rows) {
  std::ostringstream out;
  out << "alpha,N,lgl_nodes,standalone_dyadic_nodes,nested_dyadic_nodes\n";
  for (const SizeRow& r : rows) {
    out << format_number(r.alpha) << ',' << r.order << ',' << r.lgl_nodes << ',' << r.standalone_nodes << ','
        << r.nested_nodes << '\n';
  }
  return out.str();
}

std::string sizes_to_json(const std::vector<SizeRow>& rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const SizeRow& r : rows) {
    list.push_back({{"alpha", r.alpha},
                    {"N", r.order},
                    {"lgl_nodes", r.lgl_nodes},
                    {"standalone_dyadic_nodes", r.standalone_nodes},
                    {"nested_dyadic_nodes", r.nested_nodes}});
  }
  const nlohmann::json doc = {{"schema_version", kReportSchemaVersion}, {"sizes", list}};
  return doc.dump(2) + "\n";
}

}  // namespace lgldyadic
