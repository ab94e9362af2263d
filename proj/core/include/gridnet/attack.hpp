#ifndef GRIDNET_ATTACK_HPP
#define GRIDNET_ATTACK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridnet/graph.hpp"
#include "gridnet/grid_data.hpp"

namespace gridnet {

/// How post-removal efficiency is normalized after node removals.
/// fixed_n divides the surviving-pair reciprocal-distance sum by the
/// ORIGINAL N(N-1), which keeps damage in [0,1] and monotone under larger
/// removals; shrunk_n divides by the surviving pair count and can report
/// negative damage (kept for sensitivity analysis).
enum class Normalization { fixed_n, shrunk_n };

/// Which edges count as "disconnected": everything outside the largest
/// surviving component (default), or only the edges lost outright.
enum class DisconnectionStat { largest_component, incident_only };

struct AttackOptions {
  Normalization normalization = Normalization::fixed_n;
  DisconnectionStat disconnection = DisconnectionStat::largest_component;
  int workers = 0;  // 0 = hardware concurrency
};

/// One Monte Carlo removal scenario: remove k random elements of one kind,
/// simultaneously, `trials` times.
struct RemovalScenario {
  ElementKind kind = ElementKind::node;
  int k = 1;
  int trials = 1;
  std::uint64_t seed = 0;
  double bin_width = 0.0099;
};

/// Outcome statistics of a scenario. The histogram bins the damage values
/// with centers at integer multiples of bin_width (bin i covers
/// [i*w - w/2, i*w + w/2)); damage_mode is the center of the most
/// populated bin (ties to the lower bin), clamped to damage_max so the
/// mode never exceeds the observed maximum.
struct DamageDistribution {
  int year = 0;
  ElementKind kind = ElementKind::node;
  int k = 0;
  int effective_k = 0;  // k after capping to the available elements
  int trials = 0;
  std::uint64_t seed = 0;
  double bin_width = 0.0;
  double damage_max = 0.0;
  double damage_mode = 0.0;
  double damage_mean = 0.0;
  double disconnection_max = 0.0;
  double disconnection_mean = 0.0;
  std::vector<std::int64_t> histogram;
};

struct RemovalOutcome {
  Snapshot graph;
  std::vector<int> original_node_index;  // surviving dense index -> original
};

/// Deletes the targeted nodes (with incident edges) or edges and returns
/// the surviving graph plus the index mapping back to the original.
/// Throws std::invalid_argument on duplicate or out-of-range targets.
RemovalOutcome remove_elements(const Snapshot& g, ElementKind kind,
                               std::span<const int> targets);

struct DamageResult {
  double damage = 0.0;         // (eff0 - eff_after) / eff0
  double disconnection = 0.0;  // per AttackOptions::disconnection
};

/// Relative efficiency drop caused by removing `targets` at once.
/// Requires eff0 > 0 (throws UndefinedMetricError otherwise).
DamageResult damage(const Snapshot& g, ElementKind kind,
                    std::span<const int> targets,
                    const AttackOptions& options = {});

/// Runs the scenario: trial t removes a uniform k-subset drawn from a
/// stream seeded by (scenario.seed, t), so results are bit-identical for
/// any worker count. k is capped (nodes: N-1, edges: E) with the capped
/// value recorded as effective_k; throws InfeasibleScenarioError when
/// nothing is removable even after capping.
DamageDistribution run_scenario(const Snapshot& g, const RemovalScenario& s,
                                const AttackOptions& options = {});

struct WorstReport {
  ElementKind kind = ElementKind::node;
  std::string strategy;      // "exhaustive" or "greedy"
  std::vector<int> indices;  // removed element dense indices, ascending
  double damage = 0.0;
  double disconnection = 0.0;
};

/// Damage of removing each single element alone, indexed like the
/// elements. The exact mean over this vector is the trials->infinity
/// limit of a k=1 random-removal scenario.
std::vector<double> single_element_damages(const Snapshot& g,
                                           ElementKind kind,
                                           const AttackOptions& options = {});

/// Exhaustive scan over all single elements; ties by smallest index.
WorstReport worst_element(const Snapshot& g, ElementKind kind,
                          const AttackOptions& options = {});

enum class SubsetStrategy { exhaustive, greedy };

inline constexpr std::int64_t kDefaultSubsetBudget = 2'000'000;

/// Number of k-subsets, saturating at a large cap so budget checks cannot
/// overflow.
std::int64_t subset_count(int available, int k);

/// Most damaging k-subset. Exhaustive enumerates every combination (only
/// permitted while subset_count <= budget, else BudgetExceededError);
/// greedy adds the element with the best marginal damage one at a time and
/// may be suboptimal. The report labels the strategy used.
WorstReport worst_subset(const Snapshot& g, ElementKind kind, int k,
                         SubsetStrategy strategy,
                         std::int64_t budget = kDefaultSubsetBudget,
                         const AttackOptions& options = {});

/// A removed element for reports: node id, or [from_id, to_id] for edges.
nlohmann::ordered_json element_json(const Snapshot& g, ElementKind kind,
                                    int index);

nlohmann::ordered_json damage_distribution_to_json(
    const DamageDistribution& d);
std::string attack_csv_header();
std::string attack_csv_row(const DamageDistribution& d);

}  // namespace gridnet

#endif
