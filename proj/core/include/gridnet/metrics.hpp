#ifndef GRIDNET_METRICS_HPP
#define GRIDNET_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridnet/graph.hpp"

namespace gridnet {

/// Node-to-community assignment with labels forming 0..count-1.
struct Partition {
  std::vector<int> labels;
  int count = 0;

  /// Canonicalizes arbitrary labels to 0..c-1 in order of first appearance.
  static Partition from_labels(std::vector<int> raw);
  static Partition single_community(int n);

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Mean reciprocal shortest-path distance over all ordered pairs;
/// unreachable pairs contribute zero. Requires N >= 2.
double efficiency(const Snapshot& g);

/// Mean hop distance over reachable ordered pairs only, so the value stays
/// finite on disconnected graphs. Requires at least one edge.
double avg_path_length(const Snapshot& g);

/// Watts-Strogatz clustering: mean over nodes of 2*E_i/(k_i*(k_i-1)),
/// where nodes of degree < 2 contribute zero. Requires N >= 1.
double clustering(const Snapshot& g);

enum class ModularityNorm {
  standard,            // (1/2E) sum_ij (A_ij - k_i k_j / 2E) delta(g_i,g_j)
  printed_avg_degree,  // same shape with <k> in place of 2E, for comparison
};

/// Null-model modularity of a partition. Requires E >= 1 and a label per
/// node (throws std::invalid_argument on a size mismatch).
double modularity(const Snapshot& g, const Partition& p,
                  ModularityNorm norm = ModularityNorm::standard);

/// Greedy agglomerative modularity maximization: repeatedly merges the
/// connected community pair with the best modularity gain (ties broken by
/// a seeded hash) and returns the best partition seen, which is never
/// worse than the single-community partition. Deterministic for a fixed
/// seed. Requires E >= 1.
Partition detect_communities(const Snapshot& g, std::uint64_t seed = 0);

enum class SigmaBaseline { analytic, ensemble };

/// Small-world coefficient sigma = (C/C_rand)/(L/L_rand). The analytic
/// baseline uses C_rand = <k>/N and L_rand = ln N / ln <k>; the ensemble
/// baseline averages C and L over `ensemble_size` seeded degree-preserving
/// rewirings. Requires N >= 4 and <k> > 1.
double small_world_sigma(const Snapshot& g,
                         SigmaBaseline baseline = SigmaBaseline::analytic,
                         std::uint64_t seed = 0, int ensemble_size = 20);

/// Degree-preserving randomization by double-edge swaps (used by the
/// ensemble sigma baseline and exposed for tests).
Snapshot degree_preserving_rewire(const Snapshot& g, std::uint64_t seed,
                                  int swaps_per_edge = 10);

/// One year's complex-network profile.
struct MetricsReport {
  int year = 0;
  int n = 0;
  int m = 0;
  double avg_degree = 0.0;
  int diameter = 0;
  double modularity = 0.0;
  double avg_path_length = 0.0;
  double clustering = 0.0;
  double small_world = 0.0;
  double efficiency = 0.0;
};

struct MetricsOptions {
  std::uint64_t seed = 0;
  SigmaBaseline sigma_baseline = SigmaBaseline::analytic;
  int sigma_ensemble = 20;
  ModularityNorm modularity_norm = ModularityNorm::standard;
};

/// Computes the full report for one snapshot. Throws UndefinedMetricError
/// when any constituent metric is undefined for this graph.
MetricsReport compute_metrics(const Snapshot& g,
                              const MetricsOptions& options = {});

/// CSV serialization, 6 decimal places.
std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsReport& r);
nlohmann::ordered_json metrics_to_json(const MetricsReport& r);

}  // namespace gridnet

#endif
