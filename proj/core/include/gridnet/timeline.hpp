#ifndef GRIDNET_TIMELINE_HPP
#define GRIDNET_TIMELINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridnet/attack.hpp"
#include "gridnet/grid_data.hpp"
#include "gridnet/metrics.hpp"

namespace gridnet {

/// Per-scenario damage request for timeline runs; trials/bin_width are
/// shared, the seed is derived per (master seed, year, kind, k).
struct ScenarioSpec {
  ElementKind kind = ElementKind::node;
  int k = 1;
};

/// Deterministic per-coordinate seed derivation, shared by the timeline
/// and the CLI so single-year runs reproduce timeline entries exactly.
std::uint64_t scenario_seed(std::uint64_t master, int year, ElementKind kind,
                            int k);
std::uint64_t metrics_seed(std::uint64_t master, int year);

struct TimelineEntry {
  MetricsReport metrics;
  std::vector<DamageDistribution> scenarios;  // canonical (kind, k) order
};

struct TimelineSeries {
  std::vector<int> years;  // strictly increasing, empty years skipped
  std::vector<TimelineEntry> entries;
  std::vector<ScenarioSpec> scenario_specs;  // canonical order
  std::vector<std::string> warnings;
};

struct TimelineOptions {
  std::uint64_t seed = 0;
  int trials = 10000;
  double bin_width = 0.0099;
  MetricsOptions metrics;  // seed field is overridden per year
  AttackOptions attack;
};

/// Snapshots every requested year and computes metrics plus all scenario
/// distributions. Years whose snapshot is empty are skipped with a
/// warning; any other per-year failure is rethrown with the year named.
/// Bit-reproducible for a fixed master seed.
TimelineSeries build_timeline(const TemporalDataset& dataset,
                              std::span<const int> years,
                              std::span<const ScenarioSpec> scenarios,
                              const TimelineOptions& options = {});

/// Min-max scaling to [0,1]. Throws UndefinedMetricError on a constant
/// series.
std::vector<double> normalize(std::span<const double> series);

/// Pearson product-moment correlation. Requires equal lengths >= 3 and
/// both series non-constant.
double correlate(std::span<const double> x, std::span<const double> y);

enum class DamageAggregation {
  normalize_then_average,  // normalize each k-series over years, then mean
  average_then_normalize,
};

struct CorrelationEntry {
  ElementKind kind = ElementKind::node;
  std::string metric;
  double r = 0.0;
};

struct CorrelationReport {
  std::string damage_statistic = "monte_carlo_max";
  DamageAggregation aggregation = DamageAggregation::normalize_then_average;
  std::vector<int> years;
  std::vector<CorrelationEntry> entries;
};

/// Correlates the per-year maximal damage (aggregated across the scenario
/// sizes of each removal kind) with the named normalized metric series.
/// Metrics may be any of "L", "C", "sigma". Requires >= 3 years.
CorrelationReport damage_metric_report(
    const TimelineSeries& t,
    std::span<const std::string> metrics,
    DamageAggregation aggregation = DamageAggregation::normalize_then_average);

nlohmann::ordered_json correlation_report_to_json(const CorrelationReport& r);

/// One CSV row per year: the metrics columns followed by scenario summary
/// columns named like dmg_max_node_k1 or disc_mean_edge_k20.
std::string timeline_csv_header(const TimelineSeries& t);
std::string timeline_csv_row(const TimelineSeries& t, std::size_t entry);

}  // namespace gridnet

#endif
