// gridnet: temporal power-grid topology analysis and attack simulation.
//
// Subcommands: snapshot, metrics, fit, attack, worst, timeline, correlate,
// gen-fixture. Exit codes: 0 ok, 1 input error, 2 config error,
// 3 undefined metric, 4 infeasible scenario / budget exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gridnet/attack.hpp"
#include "gridnet/csv.hpp"
#include "gridnet/degree_fit.hpp"
#include "gridnet/errors.hpp"
#include "gridnet/generators.hpp"
#include "gridnet/graph.hpp"
#include "gridnet/grid_data.hpp"
#include "gridnet/metrics.hpp"
#include "gridnet/timeline.hpp"

namespace {

constexpr const char* kToolVersion = "gridnet 0.1.0";

using nlohmann::ordered_json;

struct ConfigError : gridnet::Error {
  using Error::Error;
};

struct Options {
  std::string data;
  std::string out;
  std::string format = "csv";
  std::string years_spec;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string kinds = "node,edge";
  std::string k_list;
  int trials = 10000;
  double bin_width = 0.0099;
  std::string normalization = "fixed";
  std::string disconnection = "gcc";
  std::string mod_norm = "standard";
  std::string sigma_baseline = "analytic";
  std::string strategy = "exhaustive";
  std::int64_t budget = gridnet::kDefaultSubsetBudget;
  int subset_k = 1;
  std::string metrics_list = "L,C,sigma";
  std::string aggregation = "normalize_then_average";
  int year = 2000;

  // gen-fixture
  std::string model = "grid";
  int gen_n = 400;
  int gen_edges = 774;
  int gen_attach = 2;
  double gen_p = 0.01;
  int gen_neighbors = 2;
  int start_year = 1949;
  int end_year = 2019;
  int growth = 3;
  double second_link_prob = 0.3;
  double chord_step = 0.08;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s) {
    if (c == sep) {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid ") + what + ": '" + s + "'");
  }
}

/// "start:end:step", a comma list, or a single year; returns a sorted,
/// deduplicated list.
std::vector<int> parse_years(const std::string& spec) {
  if (spec.empty()) throw ConfigError("no years given (use --years)");
  std::vector<int> years;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3)
      throw ConfigError("year range must be start:end:step, got '" + spec +
                        "'");
    const int start = parse_int(parts[0], "year");
    const int end = parse_int(parts[1], "year");
    const int step = parse_int(parts[2], "year step");
    if (step < 1) throw ConfigError("year step must be >= 1");
    if (end < start) throw ConfigError("year range end precedes start");
    for (int y = start; y <= end; y += step) years.push_back(y);
  } else {
    for (const auto& item : split(spec, ','))
      years.push_back(parse_int(item, "year"));
  }
  std::sort(years.begin(), years.end());
  years.erase(std::unique(years.begin(), years.end()), years.end());
  return years;
}

std::vector<int> parse_k_list(const std::string& spec) {
  std::vector<int> ks;
  for (const auto& item : split(spec, ',')) {
    const int k = parse_int(item, "k");
    if (k < 1) throw ConfigError("k must be >= 1, got " + item);
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<gridnet::ElementKind> parse_kinds(const std::string& spec) {
  std::vector<gridnet::ElementKind> kinds;
  for (const auto& item : split(spec, ',')) {
    try {
      kinds.push_back(gridnet::element_kind_from_string(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  // node before edge, deduplicated
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  return kinds;
}

gridnet::AttackOptions attack_options(const Options& opt) {
  gridnet::AttackOptions a;
  if (opt.normalization == "fixed")
    a.normalization = gridnet::Normalization::fixed_n;
  else if (opt.normalization == "shrunk")
    a.normalization = gridnet::Normalization::shrunk_n;
  else
    throw ConfigError("--normalization must be fixed or shrunk");
  if (opt.disconnection == "gcc")
    a.disconnection = gridnet::DisconnectionStat::largest_component;
  else if (opt.disconnection == "incident")
    a.disconnection = gridnet::DisconnectionStat::incident_only;
  else
    throw ConfigError("--disconnection must be gcc or incident");
  a.workers = opt.threads;
  return a;
}

gridnet::MetricsOptions metrics_options(const Options& opt) {
  gridnet::MetricsOptions m;
  if (opt.mod_norm == "standard")
    m.modularity_norm = gridnet::ModularityNorm::standard;
  else if (opt.mod_norm == "printed")
    m.modularity_norm = gridnet::ModularityNorm::printed_avg_degree;
  else
    throw ConfigError("--mod-norm must be standard or printed");
  if (opt.sigma_baseline == "analytic")
    m.sigma_baseline = gridnet::SigmaBaseline::analytic;
  else if (opt.sigma_baseline == "ensemble")
    m.sigma_baseline = gridnet::SigmaBaseline::ensemble;
  else
    throw ConfigError("--sigma-baseline must be analytic or ensemble");
  return m;
}

std::uint64_t require_seed(const Options& opt) {
  if (!opt.seed)
    throw ConfigError(
        "--seed is required for attack-style commands (reproducibility "
        "over convenience)");
  return *opt.seed;
}

void check_format(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json")
    throw ConfigError("--format must be csv or json");
}

/// The reproduction recipe embedded in every output file. Worker counts
/// and output paths are deliberately absent: they do not affect results.
ordered_json base_config(const Options& opt, const std::string& command) {
  ordered_json j;
  j["tool"] = kToolVersion;
  j["command"] = command;
  if (!opt.data.empty()) j["data"] = opt.data;
  return j;
}

void add_attack_config(ordered_json& j, const Options& opt,
                       const std::vector<gridnet::ElementKind>& kinds,
                       const std::vector<int>& ks) {
  auto kind_names = ordered_json::array();
  for (auto k : kinds) kind_names.push_back(gridnet::to_string(k));
  j["kinds"] = std::move(kind_names);
  j["k"] = ks;
  j["trials"] = opt.trials;
  j["seed"] = *opt.seed;
  j["bin_width"] = opt.bin_width;
  j["normalization"] = opt.normalization;
  j["disconnection"] = opt.disconnection;
}

void emit(const Options& opt, const std::string& filename,
          const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(opt.out);
  const auto path = std::filesystem::path(opt.out) / filename;
  std::ofstream f(path);
  if (!f) throw gridnet::ParseError("cannot write '" + path.string() + "'");
  f << content;
  std::cerr << "wrote " << path.string() << "\n";
}

std::string csv_document(const ordered_json& config,
                         const std::string& header,
                         const std::vector<std::string>& rows,
                         const std::vector<std::string>& extra_comments = {}) {
  std::string out = "# config: " + config.dump() + "\n";
  for (const auto& c : extra_comments) out += "# " + c + "\n";
  out += header + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

std::string json_document(const ordered_json& j) { return j.dump(2) + "\n"; }

gridnet::TemporalDataset load_or_die(const Options& opt) {
  if (opt.data.empty()) throw ConfigError("--data is required");
  auto result = gridnet::load_dataset(opt.data);
  for (const auto& w : result.warnings)
    std::cerr << "warning: " << w << "\n";
  return std::move(result.dataset);
}

// ---------------------------------------------------------------- commands

int cmd_snapshot(const Options& opt) {
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  if (years.size() != 1)
    throw ConfigError("snapshot takes exactly one year");
  const auto g = gridnet::snapshot_at(ds, years[0]);
  emit(opt, "snapshot.json", json_document(gridnet::snapshot_to_json(g)));
  return 0;
}

int cmd_metrics(const Options& opt) {
  check_format(opt);
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  const std::uint64_t seed = opt.seed.value_or(0);
  auto mopts = metrics_options(opt);

  auto config = base_config(opt, "metrics");
  config["years"] = years;
  config["seed"] = seed;
  config["mod_norm"] = opt.mod_norm;
  config["sigma_baseline"] = opt.sigma_baseline;

  std::vector<gridnet::MetricsReport> reports;
  for (int year : years) {
    gridnet::Snapshot g;
    try {
      g = gridnet::snapshot_at(ds, year);
      auto m = mopts;
      m.seed = gridnet::metrics_seed(seed, year);
      reports.push_back(gridnet::compute_metrics(g, m));
    } catch (const gridnet::EmptyGraphError& e) {
      throw gridnet::UndefinedMetricError("year " + std::to_string(year) +
                                          ": " + e.what());
    } catch (const gridnet::UndefinedMetricError& e) {
      throw gridnet::UndefinedMetricError("year " + std::to_string(year) +
                                          ": " + e.what());
    }
  }

  if (opt.format == "json") {
    auto arr = ordered_json::array();
    arr.push_back(ordered_json{{"config", config}});
    for (const auto& r : reports) arr.push_back(gridnet::metrics_to_json(r));
    emit(opt, "metrics.json", json_document(arr));
  } else {
    std::vector<std::string> rows;
    for (const auto& r : reports) rows.push_back(gridnet::metrics_csv_row(r));
    emit(opt, "metrics.csv",
         csv_document(config, gridnet::metrics_csv_header(), rows));
  }
  return 0;
}

int cmd_fit(const Options& opt) {
  check_format(opt);
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);

  auto config = base_config(opt, "fit");
  config["years"] = years;

  std::vector<std::pair<int, gridnet::ClassifyResult>> results;
  for (int year : years) {
    try {
      const auto g = gridnet::snapshot_at(ds, year);
      results.emplace_back(year, gridnet::classify(g));
    } catch (const gridnet::EmptyGraphError& e) {
      throw gridnet::UndefinedMetricError("year " + std::to_string(year) +
                                          ": " + e.what());
    } catch (const gridnet::UndefinedMetricError& e) {
      throw gridnet::UndefinedMetricError("year " + std::to_string(year) +
                                          ": " + e.what());
    }
  }

  if (opt.format == "json") {
    auto arr = ordered_json::array();
    arr.push_back(ordered_json{{"config", config}});
    for (const auto& [year, c] : results) {
      ordered_json rec;
      rec["year"] = year;
      rec["verdict"] = gridnet::to_string(c.verdict);
      rec["exponential"] =
          c.exponential ? gridnet::fit_to_json(*c.exponential)
                        : ordered_json(nullptr);
      rec["power_law"] = c.power_law ? gridnet::fit_to_json(*c.power_law)
                                     : ordered_json(nullptr);
      arr.push_back(std::move(rec));
    }
    emit(opt, "fit.json", json_document(arr));
  } else {
    std::vector<std::string> rows;
    std::vector<std::string> comments;
    for (const auto& [year, c] : results) {
      comments.push_back("classify: " + std::to_string(year) + "=" +
                         gridnet::to_string(c.verdict));
      if (c.exponential)
        rows.push_back(gridnet::fit_csv_row(year, *c.exponential));
      if (c.power_law)
        rows.push_back(gridnet::fit_csv_row(year, *c.power_law));
    }
    emit(opt, "fit.csv",
         csv_document(config, gridnet::fit_csv_header(), rows, comments));
  }
  return 0;
}

int cmd_attack(const Options& opt) {
  check_format(opt);
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  const auto kinds = parse_kinds(opt.kinds);
  const auto ks =
      parse_k_list(opt.k_list.empty() ? "1,2,5,10,15,20" : opt.k_list);
  const std::uint64_t seed = require_seed(opt);
  if (opt.trials < 1) throw ConfigError("--trials must be >= 1");
  if (!(opt.bin_width > 0)) throw ConfigError("--bin-width must be > 0");
  const auto aopts = attack_options(opt);

  auto config = base_config(opt, "attack");
  config["years"] = years;
  add_attack_config(config, opt, kinds, ks);

  std::vector<gridnet::DamageDistribution> records;
  for (int year : years) {
    const auto g = gridnet::snapshot_at(ds, year);
    for (auto kind : kinds) {
      for (int k : ks) {
        gridnet::RemovalScenario s;
        s.kind = kind;
        s.k = k;
        s.trials = opt.trials;
        s.bin_width = opt.bin_width;
        s.seed = gridnet::scenario_seed(seed, year, kind, k);
        auto dist = gridnet::run_scenario(g, s, aopts);
        if (dist.effective_k < dist.k)
          std::cerr << "notice: year " << year << " " << to_string(kind)
                    << " k=" << k << " capped to effective_k="
                    << dist.effective_k << "\n";
        records.push_back(std::move(dist));
      }
    }
  }

  if (opt.format == "json") {
    auto arr = ordered_json::array();
    arr.push_back(ordered_json{{"config", config}});
    for (const auto& r : records)
      arr.push_back(gridnet::damage_distribution_to_json(r));
    emit(opt, "attack.json", json_document(arr));
  } else {
    std::vector<std::string> rows;
    for (const auto& r : records) rows.push_back(gridnet::attack_csv_row(r));
    emit(opt, "attack.csv",
         csv_document(config, gridnet::attack_csv_header(), rows));
  }
  return 0;
}

int cmd_worst(const Options& opt) {
  check_format(opt);
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  const auto kinds = parse_kinds(opt.kinds);
  gridnet::SubsetStrategy strategy;
  if (opt.strategy == "exhaustive")
    strategy = gridnet::SubsetStrategy::exhaustive;
  else if (opt.strategy == "greedy")
    strategy = gridnet::SubsetStrategy::greedy;
  else
    throw ConfigError("--strategy must be exhaustive or greedy");
  if (opt.subset_k < 1) throw ConfigError("--k must be >= 1");
  const auto aopts = attack_options(opt);

  auto config = base_config(opt, "worst");
  auto kind_names = ordered_json::array();
  for (auto k : kinds) kind_names.push_back(gridnet::to_string(k));
  config["years"] = years;
  config["kinds"] = std::move(kind_names);
  config["k"] = opt.subset_k;
  config["strategy"] = opt.strategy;
  config["budget"] = opt.budget;
  config["normalization"] = opt.normalization;
  config["disconnection"] = opt.disconnection;

  auto results = ordered_json::array();
  std::vector<std::string> rows;
  for (int year : years) {
    const auto g = gridnet::snapshot_at(ds, year);
    for (auto kind : kinds) {
      const auto report =
          opt.subset_k == 1
              ? gridnet::worst_element(g, kind, aopts)
              : gridnet::worst_subset(g, kind, opt.subset_k, strategy,
                                      opt.budget, aopts);
      auto elements = ordered_json::array();
      for (int ix : report.indices)
        elements.push_back(gridnet::element_json(g, kind, ix));
      ordered_json rec{{"year", year},
                       {"kind", gridnet::to_string(kind)},
                       {"k", opt.subset_k},
                       {"strategy", report.strategy},
                       {"damage", report.damage},
                       {"disconnection", report.disconnection},
                       {"elements", elements}};
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%d,%s,%s,%d,%.6f,%.6f,", year,
                    gridnet::to_string(kind).c_str(),
                    report.strategy.c_str(), opt.subset_k, report.damage,
                    report.disconnection);
      rows.push_back(std::string(buf) +
                     gridnet::csv::escape_field(elements.dump()));
      results.push_back(std::move(rec));
    }
  }

  if (opt.format == "json") {
    emit(opt, "worst.json",
         json_document(
             ordered_json{{"config", config}, {"results", results}}));
  } else {
    emit(opt, "worst.csv",
         csv_document(config,
                      "year,kind,strategy,k,damage,disconnection,elements",
                      rows));
  }
  return 0;
}

gridnet::TimelineSeries run_timeline(const Options& opt,
                                     const gridnet::TemporalDataset& ds,
                                     const std::vector<int>& years,
                                     std::vector<gridnet::ScenarioSpec> specs,
                                     std::uint64_t seed) {
  gridnet::TimelineOptions topt;
  topt.seed = seed;
  topt.trials = opt.trials;
  topt.bin_width = opt.bin_width;
  topt.metrics = metrics_options(opt);
  topt.attack = attack_options(opt);
  auto series = gridnet::build_timeline(ds, years, specs, topt);
  for (const auto& w : series.warnings) std::cerr << "warning: " << w << "\n";
  return series;
}

std::vector<gridnet::ScenarioSpec> scenario_specs(
    const std::vector<gridnet::ElementKind>& kinds,
    const std::vector<int>& ks) {
  std::vector<gridnet::ScenarioSpec> specs;
  for (auto kind : kinds)
    for (int k : ks) specs.push_back({kind, k});
  return specs;
}

int cmd_timeline(const Options& opt) {
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  // Without --k the timeline is metrics-only.
  std::vector<gridnet::ScenarioSpec> specs;
  if (!opt.k_list.empty())
    specs = scenario_specs(parse_kinds(opt.kinds), parse_k_list(opt.k_list));
  const std::uint64_t seed = specs.empty() ? opt.seed.value_or(0)
                                           : require_seed(opt);

  auto config = base_config(opt, "timeline");
  config["years"] = years;
  config["seed"] = seed;
  config["mod_norm"] = opt.mod_norm;
  config["sigma_baseline"] = opt.sigma_baseline;
  if (!specs.empty()) {
    auto arr = ordered_json::array();
    for (const auto& s : specs)
      arr.push_back(gridnet::to_string(s.kind) + ":k" + std::to_string(s.k));
    config["scenarios"] = std::move(arr);
    config["trials"] = opt.trials;
    config["bin_width"] = opt.bin_width;
    config["normalization"] = opt.normalization;
    config["disconnection"] = opt.disconnection;
  }

  const auto series = run_timeline(opt, ds, years, specs, seed);
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < series.entries.size(); ++i)
    rows.push_back(gridnet::timeline_csv_row(series, i));
  emit(opt, "timeline.csv",
       csv_document(config, gridnet::timeline_csv_header(series), rows));
  return 0;
}

int cmd_correlate(const Options& opt) {
  const auto ds = load_or_die(opt);
  const auto years = parse_years(opt.years_spec);
  const auto kinds = parse_kinds(opt.kinds);
  const auto ks =
      parse_k_list(opt.k_list.empty() ? "1,2,5,10,15,20" : opt.k_list);
  const std::uint64_t seed = require_seed(opt);
  const auto specs = scenario_specs(kinds, ks);

  gridnet::DamageAggregation agg;
  if (opt.aggregation == "normalize_then_average")
    agg = gridnet::DamageAggregation::normalize_then_average;
  else if (opt.aggregation == "average_then_normalize")
    agg = gridnet::DamageAggregation::average_then_normalize;
  else
    throw ConfigError(
        "--aggregation must be normalize_then_average or "
        "average_then_normalize");
  std::vector<std::string> metric_names;
  for (const auto& name : split(opt.metrics_list, ','))
    metric_names.push_back(name);

  auto config = base_config(opt, "correlate");
  config["years"] = years;
  add_attack_config(config, opt, kinds, ks);
  config["metrics"] = metric_names;
  config["aggregation"] = opt.aggregation;
  config["mod_norm"] = opt.mod_norm;
  config["sigma_baseline"] = opt.sigma_baseline;

  const auto series = run_timeline(opt, ds, years, specs, seed);
  const auto report =
      gridnet::damage_metric_report(series, metric_names, agg);

  auto doc = correlation_report_to_json(report);
  ordered_json out;
  out["config"] = config;
  for (auto& [key, value] : doc.items()) out[key] = value;
  emit(opt, "correlations.json", json_document(out));
  return 0;
}

int cmd_gen_fixture(const Options& opt) {
  if (opt.out.empty())
    throw ConfigError("gen-fixture requires --out <dir>");
  const std::uint64_t seed = opt.seed.value_or(1);

  gridnet::TemporalDataset ds;
  if (opt.model == "grid") {
    gridnet::GrowingGridParams p;
    p.start_year = opt.start_year;
    p.end_year = opt.end_year;
    p.growth_per_year = opt.growth;
    p.second_link_prob = opt.second_link_prob;
    p.chords_per_year_step = opt.chord_step;
    p.seed = seed;
    ds = gridnet::generate_growing_grid(p);
  } else {
    gridnet::Snapshot g;
    try {
      if (opt.model == "gnm")
        g = gridnet::make_gnm(opt.gen_n, opt.gen_edges, seed, opt.year);
      else if (opt.model == "ba")
        g = gridnet::make_preferential_attachment(opt.gen_n, opt.gen_attach,
                                                  seed, opt.year);
      else if (opt.model == "er")
        g = gridnet::make_erdos_renyi(opt.gen_n, opt.gen_p, seed, opt.year);
      else if (opt.model == "ring")
        g = gridnet::make_ring(opt.gen_n, opt.gen_neighbors, opt.year);
      else if (opt.model == "path")
        g = gridnet::make_path(opt.gen_n, opt.year);
      else if (opt.model == "star")
        g = gridnet::make_star(opt.gen_n, opt.year);
      else if (opt.model == "complete")
        g = gridnet::make_complete(opt.gen_n, opt.year);
      else
        throw ConfigError("unknown model '" + opt.model + "'");
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    ds = gridnet::to_dataset(g);
  }

  gridnet::save_dataset(opt.out, ds);
  std::cout << "fixture: model=" << opt.model << " nodes=" << ds.nodes.size()
            << " edges=" << ds.edges.size() << " years=[" << ds.first_year
            << "," << ds.last_year << "] seed=" << seed << " -> " << opt.out
            << "\n";
  return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_data = true) {
  if (with_data)
    cmd->add_option("--data", opt.data,
                    "Dataset directory holding nodes.csv and edges.csv");
  cmd->add_option("--out", opt.out,
                  "Output directory (default: write to stdout)");
  cmd->add_option("--format", opt.format, "Output format: csv or json");
  cmd->add_option("--seed", opt.seed, "Master seed (all randomness derives "
                                      "from it)");
  cmd->add_option("--threads", opt.threads,
                  "Worker threads, 0 = hardware (results do not depend on "
                  "this)");
}

void add_years(CLI::App* cmd, Options& opt) {
  cmd->add_option("--years,--year", opt.years_spec,
                  "Years: start:end:step, comma list, or single year")
      ->required();
}

void add_attack_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--kind", opt.kinds, "Removal kind: node, edge, or both");
  cmd->add_option("--k", opt.k_list, "Comma list of removal sizes");
  cmd->add_option("--trials", opt.trials, "Monte Carlo repetitions");
  cmd->add_option("--bin-width", opt.bin_width,
                  "Histogram bin width for the damage mode");
  cmd->add_option("--normalization", opt.normalization,
                  "Post-removal efficiency normalization: fixed or shrunk");
  cmd->add_option("--disconnection", opt.disconnection,
                  "Disconnection statistic: gcc or incident");
}

void add_metrics_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mod-norm", opt.mod_norm,
                  "Modularity normalization: standard or printed");
  cmd->add_option("--sigma-baseline", opt.sigma_baseline,
                  "Small-world baseline: analytic or ensemble");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal power-grid topology analysis and vulnerability "
               "simulation"};
  app.require_subcommand(1);
  Options opt;

  auto* snapshot = app.add_subcommand(
      "snapshot", "Export the graph active in one year as JSON");
  add_common(snapshot, opt);
  add_years(snapshot, opt);

  auto* metrics = app.add_subcommand(
      "metrics", "Per-year complex-network metrics (CSV/JSON)");
  add_common(metrics, opt);
  add_years(metrics, opt);
  add_metrics_flags(metrics, opt);

  auto* fit = app.add_subcommand(
      "fit", "Fit exponential and power-law models to the cumulative "
             "degree distribution");
  add_common(fit, opt);
  add_years(fit, opt);

  auto* attack = app.add_subcommand(
      "attack", "Monte Carlo simultaneous-removal scenarios");
  add_common(attack, opt);
  add_years(attack, opt);
  add_attack_flags(attack, opt);

  auto* worst = app.add_subcommand(
      "worst", "Most damaging single element or element subset");
  add_common(worst, opt);
  add_years(worst, opt);
  worst->add_option("--kind", opt.kinds, "node, edge, or both");
  worst->add_option("--k", opt.subset_k, "Subset size");
  worst->add_option("--strategy", opt.strategy, "exhaustive or greedy");
  worst->add_option("--budget", opt.budget,
                    "Max combinations for exhaustive search");
  worst->add_option("--normalization", opt.normalization,
                    "fixed or shrunk");
  worst->add_option("--disconnection", opt.disconnection,
                    "gcc or incident");

  auto* timeline = app.add_subcommand(
      "timeline", "Metrics and scenario summaries per year (CSV)");
  add_common(timeline, opt);
  add_years(timeline, opt);
  add_attack_flags(timeline, opt);
  add_metrics_flags(timeline, opt);

  auto* correlate = app.add_subcommand(
      "correlate", "Pearson correlation of normalized damage with L/C/sigma");
  add_common(correlate, opt);
  add_years(correlate, opt);
  add_attack_flags(correlate, opt);
  add_metrics_flags(correlate, opt);
  correlate->add_option("--metrics", opt.metrics_list,
                        "Metric series to correlate against");
  correlate->add_option("--aggregation", opt.aggregation,
                        "normalize_then_average or average_then_normalize");

  auto* gen = app.add_subcommand(
      "gen-fixture", "Generate a synthetic dataset (nodes.csv/edges.csv)");
  add_common(gen, opt, /*with_data=*/false);
  gen->add_option("--model", opt.model,
                  "grid, gnm, ba, er, ring, path, star, complete");
  gen->add_option("--n", opt.gen_n, "Node count (static models)");
  gen->add_option("--edges", opt.gen_edges, "Edge count (gnm)");
  gen->add_option("--m", opt.gen_attach, "Edges per new node (ba)");
  gen->add_option("--p", opt.gen_p, "Edge probability (er)");
  gen->add_option("--neighbors", opt.gen_neighbors,
                  "Lattice neighbors (ring)");
  gen->add_option("--year", opt.year, "Commission year for static models");
  gen->add_option("--start-year", opt.start_year, "grid model start year");
  gen->add_option("--end-year", opt.end_year, "grid model end year");
  gen->add_option("--growth", opt.growth, "grid model nodes per year");
  gen->add_option("--second-link-prob", opt.second_link_prob,
                  "grid model probability of a second attachment");
  gen->add_option("--chord-step", opt.chord_step,
                  "grid model chord budget growth per year");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (snapshot->parsed()) return cmd_snapshot(opt);
    if (metrics->parsed()) return cmd_metrics(opt);
    if (fit->parsed()) return cmd_fit(opt);
    if (attack->parsed()) return cmd_attack(opt);
    if (worst->parsed()) return cmd_worst(opt);
    if (timeline->parsed()) return cmd_timeline(opt);
    if (correlate->parsed()) return cmd_correlate(opt);
    if (gen->parsed()) return cmd_gen_fixture(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gridnet::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const gridnet::InfeasibleScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const gridnet::UndefinedMetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gridnet::FitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gridnet::EmptyGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gridnet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
