#include "gridnet/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gridnet/errors.hpp"
#include "gridnet/rng.hpp"

namespace gridnet {

namespace {

bool canonical_less(const ScenarioSpec& a, const ScenarioSpec& b) {
  if (a.kind != b.kind) return a.kind == ElementKind::node;
  return a.k < b.k;
}

double metric_value(const MetricsReport& m, const std::string& name) {
  if (name == "L") return m.avg_path_length;
  if (name == "C") return m.clustering;
  if (name == "sigma") return m.small_world;
  throw std::invalid_argument("unknown metric '" + name +
                              "' (expected L, C or sigma)");
}

std::string scenario_column(const char* stat, const ScenarioSpec& s) {
  return std::string(stat) + "_" + to_string(s.kind) + "_k" +
         std::to_string(s.k);
}

}  // namespace

std::uint64_t scenario_seed(std::uint64_t master, int year, ElementKind kind,
                            int k) {
  const std::uint64_t kind_code = kind == ElementKind::node ? 0 : 1;
  return mix_seed(mix_seed(master, static_cast<std::uint64_t>(year)),
                  kind_code * 1000003ULL + static_cast<std::uint64_t>(k));
}

std::uint64_t metrics_seed(std::uint64_t master, int year) {
  return mix_seed(master, static_cast<std::uint64_t>(year));
}

TimelineSeries build_timeline(const TemporalDataset& dataset,
                              std::span<const int> years,
                              std::span<const ScenarioSpec> scenarios,
                              const TimelineOptions& options) {
  if (years.empty()) throw std::invalid_argument("no years requested");
  for (std::size_t i = 1; i < years.size(); ++i)
    if (years[i] <= years[i - 1])
      throw std::invalid_argument("years must be strictly increasing");

  TimelineSeries series;
  series.scenario_specs.assign(scenarios.begin(), scenarios.end());
  std::sort(series.scenario_specs.begin(), series.scenario_specs.end(),
            canonical_less);
  series.scenario_specs.erase(
      std::unique(series.scenario_specs.begin(), series.scenario_specs.end(),
                  [](const ScenarioSpec& a, const ScenarioSpec& b) {
                    return a.kind == b.kind && a.k == b.k;
                  }),
      series.scenario_specs.end());

  for (int year : years) {
    Snapshot g;
    try {
      g = snapshot_at(dataset, year);
    } catch (const EmptyGraphError& e) {
      series.warnings.push_back("year " + std::to_string(year) +
                                " skipped: " + e.what());
      continue;
    }
    try {
      TimelineEntry entry;
      MetricsOptions mopt = options.metrics;
      mopt.seed = metrics_seed(options.seed, year);
      entry.metrics = compute_metrics(g, mopt);
      for (const auto& spec : series.scenario_specs) {
        RemovalScenario s;
        s.kind = spec.kind;
        s.k = spec.k;
        s.trials = options.trials;
        s.bin_width = options.bin_width;
        s.seed = scenario_seed(options.seed, year, spec.kind, spec.k);
        entry.scenarios.push_back(run_scenario(g, s, options.attack));
      }
      series.years.push_back(year);
      series.entries.push_back(std::move(entry));
    } catch (const UndefinedMetricError& e) {
      throw UndefinedMetricError("year " + std::to_string(year) + ": " +
                                 e.what());
    } catch (const InfeasibleScenarioError& e) {
      throw InfeasibleScenarioError("year " + std::to_string(year) + ": " +
                                    e.what());
    }
  }
  return series;
}

std::vector<double> normalize(std::span<const double> series) {
  if (series.empty())
    throw std::invalid_argument("cannot normalize an empty series");
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  if (*lo == *hi)
    throw UndefinedMetricError(
        "min-max normalization undefined for a constant series");
  std::vector<double> out;
  out.reserve(series.size());
  for (double v : series) out.push_back((v - *lo) / (*hi - *lo));
  return out;
}

double correlate(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("series length mismatch: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  const std::size_t n = x.size();
  if (n < 3)
    throw std::invalid_argument("correlation needs at least 3 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw UndefinedMetricError(
        "correlation undefined for a constant series");
  return sxy / std::sqrt(sxx * syy);
}

CorrelationReport damage_metric_report(const TimelineSeries& t,
                                       std::span<const std::string> metrics,
                                       DamageAggregation aggregation) {
  const std::size_t years = t.entries.size();
  if (years < 3)
    throw std::invalid_argument(
        "damage/metric correlation needs at least 3 years");

  CorrelationReport report;
  report.aggregation = aggregation;
  report.years = t.years;

  for (ElementKind kind : {ElementKind::node, ElementKind::edge}) {
    // Column indices of this kind's scenarios.
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < t.scenario_specs.size(); ++c)
      if (t.scenario_specs[c].kind == kind) cols.push_back(c);
    if (cols.empty()) continue;

    std::vector<double> aggregated(years, 0.0);
    if (aggregation == DamageAggregation::normalize_then_average) {
      for (std::size_t c : cols) {
        std::vector<double> per_year;
        per_year.reserve(years);
        for (const auto& entry : t.entries)
          per_year.push_back(entry.scenarios[c].damage_max);
        const auto scaled = normalize(per_year);
        for (std::size_t y = 0; y < years; ++y)
          aggregated[y] += scaled[y] / static_cast<double>(cols.size());
      }
    } else {
      for (std::size_t y = 0; y < years; ++y) {
        double sum = 0.0;
        for (std::size_t c : cols)
          sum += t.entries[y].scenarios[c].damage_max;
        aggregated[y] = sum / static_cast<double>(cols.size());
      }
      aggregated = normalize(aggregated);
    }

    for (const auto& name : metrics) {
      std::vector<double> metric_series;
      metric_series.reserve(years);
      for (const auto& entry : t.entries)
        metric_series.push_back(metric_value(entry.metrics, name));
      const auto scaled = normalize(metric_series);
      report.entries.push_back({kind, name, correlate(aggregated, scaled)});
    }
  }
  return report;
}

nlohmann::ordered_json correlation_report_to_json(
    const CorrelationReport& r) {
  nlohmann::ordered_json j;
  j["damage_statistic"] = r.damage_statistic;
  j["aggregation"] = r.aggregation == DamageAggregation::normalize_then_average
                         ? "normalize_then_average"
                         : "average_then_normalize";
  j["years"] = r.years;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"kind", to_string(e.kind)},
                       {"metric", e.metric},
                       {"r", e.r}});
  j["correlations"] = std::move(entries);
  return j;
}

std::string timeline_csv_header(const TimelineSeries& t) {
  std::string header = metrics_csv_header();
  for (const auto& spec : t.scenario_specs) {
    for (const char* stat :
         {"dmg_max", "dmg_mode", "dmg_mean", "disc_max", "disc_mean"}) {
      header += ',';
      header += scenario_column(stat, spec);
    }
  }
  return header;
}

std::string timeline_csv_row(const TimelineSeries& t, std::size_t entry) {
  const auto& e = t.entries.at(entry);
  std::string row = metrics_csv_row(e.metrics);
  char buf[32];
  for (const auto& d : e.scenarios) {
    for (double v : {d.damage_max, d.damage_mode, d.damage_mean,
                     d.disconnection_max, d.disconnection_mean}) {
      std::snprintf(buf, sizeof(buf), ",%.6f", v);
      row += buf;
    }
  }
  return row;
}

}  // namespace gridnet
