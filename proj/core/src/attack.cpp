#include "gridnet/attack.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gridnet/errors.hpp"
#include "gridnet/parallel.hpp"
#include "gridnet/rng.hpp"

namespace gridnet {

namespace {

/// Reusable per-worker scratch state for damage evaluations. The surviving
/// adjacency is rebuilt per evaluation (cheap), distances are taken with
/// bit-parallel multi-source BFS (64 sources per pass), and ordered pairs
/// are aggregated as an integer histogram of distances. The reciprocal sum
/// is computed from the histogram alone, so isomorphic removals yield
/// bit-identical damage and ties are exact.
class DamageEngine {
public:
  explicit DamageEngine(const Snapshot& g) : g_(g) {
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    node_removed_.assign(n, 0);
    edge_removed_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    xadj_.assign(n + 1, 0);
    adj_.resize(2 * static_cast<std::size_t>(g.edge_count()));
    degree_.assign(n, 0);
    cur_.assign(n, 0);
    next_.assign(n, 0);
    reached_.assign(n, 0);
    comp_.assign(n, -1);
    queue_.reserve(n);
    dist_count_.assign(n + 1, 0);
  }

  struct EvalOut {
    double recip_sum = 0.0;   // sum of 1/d over surviving ordered pairs
    int surviving_nodes = 0;
    int surviving_edges = 0;
    int gcc_edges = 0;        // edges inside the largest surviving component
  };

  EvalOut evaluate(ElementKind kind, std::span<const int> targets) {
    for (int t : targets) {
      if (kind == ElementKind::node)
        node_removed_[static_cast<std::size_t>(t)] = 1;
      else
        edge_removed_[static_cast<std::size_t>(t)] = 1;
    }
    EvalOut out = run();
    for (int t : targets) {
      if (kind == ElementKind::node)
        node_removed_[static_cast<std::size_t>(t)] = 0;
      else
        edge_removed_[static_cast<std::size_t>(t)] = 0;
    }
    return out;
  }

private:
  void rebuild_surviving_csr() {
    const int n = g_.node_count();
    std::fill(degree_.begin(), degree_.end(), 0);
    const auto& edges = g_.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edge_removed_[static_cast<std::size_t>(e)]) continue;
      const auto& edge = edges[static_cast<std::size_t>(e)];
      if (node_removed_[static_cast<std::size_t>(edge.lo)] ||
          node_removed_[static_cast<std::size_t>(edge.hi)])
        continue;
      ++degree_[static_cast<std::size_t>(edge.lo)];
      ++degree_[static_cast<std::size_t>(edge.hi)];
    }
    xadj_[0] = 0;
    for (int i = 0; i < n; ++i)
      xadj_[static_cast<std::size_t>(i) + 1] =
          xadj_[static_cast<std::size_t>(i)] +
          degree_[static_cast<std::size_t>(i)];
    std::copy(xadj_.begin(), xadj_.end() - 1, degree_.begin());
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edge_removed_[static_cast<std::size_t>(e)]) continue;
      const auto& edge = edges[static_cast<std::size_t>(e)];
      if (node_removed_[static_cast<std::size_t>(edge.lo)] ||
          node_removed_[static_cast<std::size_t>(edge.hi)])
        continue;
      adj_[static_cast<std::size_t>(degree_[static_cast<std::size_t>(edge.lo)]++)] =
          edge.hi;
      adj_[static_cast<std::size_t>(degree_[static_cast<std::size_t>(edge.hi)]++)] =
          edge.lo;
    }
  }

  EvalOut run() {
    const int n = g_.node_count();
    EvalOut out;
    rebuild_surviving_csr();

    std::fill(dist_count_.begin(), dist_count_.end(), 0);
    std::vector<int> sources;
    sources.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
      if (!node_removed_[static_cast<std::size_t>(s)]) sources.push_back(s);
    out.surviving_nodes = static_cast<int>(sources.size());

    // 64 sources advance together; bit i of reached_[v] says source i of
    // the batch has seen v. Newly set bits at level d are pairs at
    // distance d.
    for (std::size_t base = 0; base < sources.size(); base += 64) {
      const std::size_t batch =
          std::min<std::size_t>(64, sources.size() - base);
      std::fill(cur_.begin(), cur_.end(), 0);
      std::fill(reached_.begin(), reached_.end(), 0);
      for (std::size_t b = 0; b < batch; ++b) {
        const int s = sources[base + b];
        cur_[static_cast<std::size_t>(s)] = 1ULL << b;
        reached_[static_cast<std::size_t>(s)] = 1ULL << b;
      }
      bool active = true;
      for (int level = 1; active; ++level) {
        active = false;
        for (const int v : sources) {
          std::uint64_t gathered = 0;
          for (int idx = xadj_[static_cast<std::size_t>(v)];
               idx < xadj_[static_cast<std::size_t>(v) + 1]; ++idx)
            gathered |= cur_[static_cast<std::size_t>(adj_[static_cast<std::size_t>(idx)])];
          next_[static_cast<std::size_t>(v)] =
              gathered & ~reached_[static_cast<std::size_t>(v)];
        }
        std::int64_t found = 0;
        for (const int v : sources) {
          const std::uint64_t fresh = next_[static_cast<std::size_t>(v)];
          if (!fresh) continue;
          reached_[static_cast<std::size_t>(v)] |= fresh;
          found += std::popcount(fresh);
        }
        if (found) {
          dist_count_[static_cast<std::size_t>(level)] += found;
          active = true;
          std::swap(cur_, next_);
        }
      }
    }
    for (std::size_t d = 1; d < dist_count_.size(); ++d)
      if (dist_count_[d])
        out.recip_sum +=
            static_cast<double>(dist_count_[d]) / static_cast<double>(d);

    // Component labeling over the surviving adjacency.
    std::fill(comp_.begin(), comp_.end(), -1);
    int largest_nodes = 0;
    int largest_label = -1;
    int labels = 0;
    for (const int s : sources) {
      if (comp_[static_cast<std::size_t>(s)] != -1) continue;
      const int label = labels++;
      queue_.clear();
      queue_.push_back(s);
      comp_[static_cast<std::size_t>(s)] = label;
      int nodes = 0;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        const int u = queue_[head];
        ++nodes;
        for (int idx = xadj_[static_cast<std::size_t>(u)];
             idx < xadj_[static_cast<std::size_t>(u) + 1]; ++idx) {
          const int v = adj_[static_cast<std::size_t>(idx)];
          if (comp_[static_cast<std::size_t>(v)] == -1) {
            comp_[static_cast<std::size_t>(v)] = label;
            queue_.push_back(v);
          }
        }
      }
      if (nodes > largest_nodes) {
        largest_nodes = nodes;
        largest_label = label;
      }
    }

    const auto& edges = g_.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edge_removed_[static_cast<std::size_t>(e)]) continue;
      const auto& edge = edges[static_cast<std::size_t>(e)];
      if (node_removed_[static_cast<std::size_t>(edge.lo)] ||
          node_removed_[static_cast<std::size_t>(edge.hi)])
        continue;
      ++out.surviving_edges;
      if (comp_[static_cast<std::size_t>(edge.lo)] == largest_label)
        ++out.gcc_edges;
    }
    return out;
  }

  const Snapshot& g_;
  std::vector<int> xadj_, adj_, degree_, comp_, queue_;
  std::vector<std::uint8_t> node_removed_, edge_removed_;
  std::vector<std::uint64_t> cur_, next_, reached_;
  std::vector<std::int64_t> dist_count_;
};

void validate_targets(const Snapshot& g, ElementKind kind,
                      std::span<const int> targets) {
  const int limit =
      kind == ElementKind::node ? g.node_count() : g.edge_count();
  std::vector<int> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= limit)
      throw std::invalid_argument("removal target " +
                                  std::to_string(sorted[i]) +
                                  " out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("duplicate removal target " +
                                  std::to_string(sorted[i]));
  }
}

double damage_from(const DamageEngine::EvalOut& base,
                   const DamageEngine::EvalOut& after,
                   Normalization normalization, int original_n) {
  if (normalization == Normalization::fixed_n) {
    // The N(N-1) denominators cancel.
    return (base.recip_sum - after.recip_sum) / base.recip_sum;
  }
  const double pairs0 =
      static_cast<double>(original_n) * (original_n - 1);
  const double eff0 = base.recip_sum / pairs0;
  const long long ns = after.surviving_nodes;
  const double eff_after =
      ns >= 2 ? after.recip_sum / (static_cast<double>(ns) * (ns - 1)) : 0.0;
  return (eff0 - eff_after) / eff0;
}

double disconnection_from(const DamageEngine::EvalOut& base,
                          const DamageEngine::EvalOut& after,
                          DisconnectionStat stat) {
  if (base.surviving_edges == 0) return 0.0;
  const int kept = stat == DisconnectionStat::largest_component
                       ? after.gcc_edges
                       : after.surviving_edges;
  return static_cast<double>(base.surviving_edges - kept) /
         static_cast<double>(base.surviving_edges);
}

int capped_k(const Snapshot& g, ElementKind kind, int k) {
  const int cap = kind == ElementKind::node ? g.node_count() - 1
                                            : g.edge_count();
  return std::min(k, cap);
}

/// Lexicographic unranking of the rank-th k-combination of [0, n).
void unrank_combination(std::int64_t rank, int n, int k,
                        std::vector<int>& out) {
  out.clear();
  int next = 0;
  for (int j = 0; j < k; ++j) {
    for (int v = next; v < n; ++v) {
      const std::int64_t below = subset_count(n - v - 1, k - j - 1);
      if (rank < below) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= below;
    }
  }
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::int64_t subset_count(int available, int k) {
  if (k < 0 || k > available) return 0;
  if (k == 0) return 1;
  constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    if (result > cap / (available - i + 1)) return cap;
    result = result * (available - i + 1) / i;
  }
  return result;
}

RemovalOutcome remove_elements(const Snapshot& g, ElementKind kind,
                               std::span<const int> targets) {
  validate_targets(g, kind, targets);
  RemovalOutcome out;
  if (kind == ElementKind::node) {
    std::vector<char> removed(static_cast<std::size_t>(g.node_count()), 0);
    for (int t : targets) removed[static_cast<std::size_t>(t)] = 1;
    std::vector<int> remap(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<std::string> ids;
    for (int i = 0; i < g.node_count(); ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      remap[static_cast<std::size_t>(i)] = static_cast<int>(ids.size());
      out.original_node_index.push_back(i);
      ids.push_back(g.id_of(i));
    }
    std::vector<EdgeIx> edges;
    for (const auto& e : g.edges()) {
      if (removed[static_cast<std::size_t>(e.lo)] ||
          removed[static_cast<std::size_t>(e.hi)])
        continue;
      edges.push_back({remap[static_cast<std::size_t>(e.lo)],
                       remap[static_cast<std::size_t>(e.hi)]});
    }
    out.graph = Snapshot::build(std::move(ids), std::move(edges), g.year());
  } else {
    std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
    for (int t : targets) removed[static_cast<std::size_t>(t)] = 1;
    std::vector<EdgeIx> edges;
    for (int e = 0; e < g.edge_count(); ++e)
      if (!removed[static_cast<std::size_t>(e)])
        edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
    out.graph = Snapshot::build(g.ids(), std::move(edges), g.year());
    out.original_node_index.resize(static_cast<std::size_t>(g.node_count()));
    std::iota(out.original_node_index.begin(),
              out.original_node_index.end(), 0);
  }
  return out;
}

DamageResult damage(const Snapshot& g, ElementKind kind,
                    std::span<const int> targets,
                    const AttackOptions& options) {
  validate_targets(g, kind, targets);
  DamageEngine engine(g);
  const auto base = engine.evaluate(kind, {});
  if (base.recip_sum <= 0.0)
    throw UndefinedMetricError(
        "initial efficiency is zero; damage undefined");
  const auto after = engine.evaluate(kind, targets);
  return {damage_from(base, after, options.normalization, g.node_count()),
          disconnection_from(base, after, options.disconnection)};
}

DamageDistribution run_scenario(const Snapshot& g, const RemovalScenario& s,
                                const AttackOptions& options) {
  if (s.k < 1) throw std::invalid_argument("scenario k must be >= 1");
  if (s.trials < 1)
    throw std::invalid_argument("scenario trials must be >= 1");
  if (!(s.bin_width > 0.0))
    throw std::invalid_argument("scenario bin_width must be positive");

  const int available =
      s.kind == ElementKind::node ? g.node_count() : g.edge_count();
  const int k = capped_k(g, s.kind, s.k);
  if (k < 1)
    throw InfeasibleScenarioError(
        "no " + to_string(s.kind) +
        " removable even after capping (available: " +
        std::to_string(available) + ")");

  DamageEngine base_engine(g);
  const auto base = base_engine.evaluate(s.kind, {});
  if (base.recip_sum <= 0.0)
    throw UndefinedMetricError(
        "initial efficiency is zero; scenario undefined");

  std::vector<double> damage_by_trial(static_cast<std::size_t>(s.trials));
  std::vector<double> disc_by_trial(static_cast<std::size_t>(s.trials));

  parallel_chunks(
      s.trials, options.workers,
      [&](std::int64_t begin, std::int64_t end, int) {
        DamageEngine engine(g);
        std::vector<int> pool(static_cast<std::size_t>(available));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<std::pair<int, int>> swaps;
        swaps.reserve(static_cast<std::size_t>(k));
        for (std::int64_t t = begin; t < end; ++t) {
          auto rng = make_rng(mix_seed(s.seed, static_cast<std::uint64_t>(t)));
          swaps.clear();
          for (int j = 0; j < k; ++j) {
            std::uniform_int_distribution<int> pick(j, available - 1);
            const int r = pick(rng);
            std::swap(pool[static_cast<std::size_t>(j)],
                      pool[static_cast<std::size_t>(r)]);
            swaps.emplace_back(j, r);
          }
          const auto after = engine.evaluate(
              s.kind, std::span<const int>(pool.data(),
                                           static_cast<std::size_t>(k)));
          damage_by_trial[static_cast<std::size_t>(t)] = damage_from(
              base, after, options.normalization, g.node_count());
          disc_by_trial[static_cast<std::size_t>(t)] =
              disconnection_from(base, after, options.disconnection);
          for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
            std::swap(pool[static_cast<std::size_t>(it->first)],
                      pool[static_cast<std::size_t>(it->second)]);
        }
      });

  DamageDistribution dist;
  dist.year = g.year();
  dist.kind = s.kind;
  dist.k = s.k;
  dist.effective_k = k;
  dist.trials = s.trials;
  dist.seed = s.seed;
  dist.bin_width = s.bin_width;

  const int bins =
      static_cast<int>(std::llround(1.0 / s.bin_width)) + 1;
  dist.histogram.assign(static_cast<std::size_t>(bins), 0);
  double damage_sum = 0.0, disc_sum = 0.0;
  for (int t = 0; t < s.trials; ++t) {
    const double d = damage_by_trial[static_cast<std::size_t>(t)];
    const double x = disc_by_trial[static_cast<std::size_t>(t)];
    damage_sum += d;
    disc_sum += x;
    dist.damage_max = std::max(dist.damage_max, d);
    dist.disconnection_max = std::max(dist.disconnection_max, x);
    int bin = static_cast<int>(std::llround(d / s.bin_width));
    bin = std::clamp(bin, 0, bins - 1);
    ++dist.histogram[static_cast<std::size_t>(bin)];
  }
  dist.damage_mean = damage_sum / s.trials;
  dist.disconnection_mean = disc_sum / s.trials;
  const auto mode_bin = static_cast<int>(
      std::max_element(dist.histogram.begin(), dist.histogram.end()) -
      dist.histogram.begin());
  dist.damage_mode =
      std::min(mode_bin * s.bin_width, dist.damage_max);
  return dist;
}

std::vector<double> single_element_damages(const Snapshot& g,
                                           ElementKind kind,
                                           const AttackOptions& options) {
  const int count =
      kind == ElementKind::node ? g.node_count() : g.edge_count();
  if (count < 1)
    throw std::invalid_argument("no elements of this kind to scan");

  DamageEngine base_engine(g);
  const auto base = base_engine.evaluate(kind, {});
  if (base.recip_sum <= 0.0)
    throw UndefinedMetricError(
        "initial efficiency is zero; damage scan undefined");

  std::vector<double> damages(static_cast<std::size_t>(count));
  parallel_chunks(count, options.workers,
                  [&](std::int64_t begin, std::int64_t end, int) {
                    DamageEngine engine(g);
                    for (std::int64_t i = begin; i < end; ++i) {
                      const int target = static_cast<int>(i);
                      const auto after =
                          engine.evaluate(kind, std::span(&target, 1));
                      damages[static_cast<std::size_t>(i)] =
                          damage_from(base, after, options.normalization,
                                      g.node_count());
                    }
                  });
  return damages;
}

WorstReport worst_element(const Snapshot& g, ElementKind kind,
                          const AttackOptions& options) {
  const auto damages = single_element_damages(g, kind, options);
  int best = 0;
  for (int i = 1; i < static_cast<int>(damages.size()); ++i)
    if (damages[static_cast<std::size_t>(i)] >
        damages[static_cast<std::size_t>(best)])
      best = i;

  WorstReport report;
  report.kind = kind;
  report.strategy = "exhaustive";
  report.indices = {best};
  report.damage = damages[static_cast<std::size_t>(best)];

  DamageEngine engine(g);
  const auto base = engine.evaluate(kind, {});
  const auto after = engine.evaluate(kind, report.indices);
  report.disconnection =
      disconnection_from(base, after, options.disconnection);
  return report;
}

WorstReport worst_subset(const Snapshot& g, ElementKind kind, int k,
                         SubsetStrategy strategy, std::int64_t budget,
                         const AttackOptions& options) {
  const int count =
      kind == ElementKind::node ? g.node_count() : g.edge_count();
  if (k < 1 || k > count)
    throw std::invalid_argument("subset size " + std::to_string(k) +
                                " out of range for " +
                                std::to_string(count) + " elements");

  DamageEngine base_engine(g);
  const auto base = base_engine.evaluate(kind, {});
  if (base.recip_sum <= 0.0)
    throw UndefinedMetricError(
        "initial efficiency is zero; worst subset undefined");

  WorstReport report;
  report.kind = kind;

  if (strategy == SubsetStrategy::exhaustive) {
    const std::int64_t total = subset_count(count, k);
    if (total > budget)
      throw BudgetExceededError(
          "exhaustive search over " + std::to_string(total) +
          " subsets exceeds the budget of " + std::to_string(budget) +
          "; use the greedy strategy");
    std::vector<double> damages(static_cast<std::size_t>(total));
    parallel_chunks(
        total, options.workers,
        [&](std::int64_t begin, std::int64_t end, int) {
          DamageEngine engine(g);
          std::vector<int> combo;
          unrank_combination(begin, count, k, combo);
          for (std::int64_t rank = begin; rank < end; ++rank) {
            const auto after = engine.evaluate(kind, combo);
            damages[static_cast<std::size_t>(rank)] = damage_from(
                base, after, options.normalization, g.node_count());
            if (rank + 1 < end) next_combination(combo, count);
          }
        });
    std::int64_t best = 0;
    for (std::int64_t r = 1; r < total; ++r)
      if (damages[static_cast<std::size_t>(r)] >
          damages[static_cast<std::size_t>(best)])
        best = r;
    std::vector<int> combo;
    unrank_combination(best, count, k, combo);
    report.strategy = "exhaustive";
    report.indices = combo;
    report.damage = damages[static_cast<std::size_t>(best)];
  } else {
    std::vector<int> chosen;
    std::vector<char> in_set(static_cast<std::size_t>(count), 0);
    for (int round = 0; round < k; ++round) {
      std::vector<double> damages(static_cast<std::size_t>(count),
                                  -std::numeric_limits<double>::infinity());
      parallel_chunks(
          count, options.workers,
          [&](std::int64_t begin, std::int64_t end, int) {
            DamageEngine engine(g);
            std::vector<int> candidate(chosen.begin(), chosen.end());
            candidate.push_back(0);
            for (std::int64_t i = begin; i < end; ++i) {
              if (in_set[static_cast<std::size_t>(i)]) continue;
              candidate.back() = static_cast<int>(i);
              const auto after = engine.evaluate(kind, candidate);
              damages[static_cast<std::size_t>(i)] = damage_from(
                  base, after, options.normalization, g.node_count());
            }
          });
      int best = -1;
      for (int i = 0; i < count; ++i) {
        if (in_set[static_cast<std::size_t>(i)]) continue;
        if (best < 0 || damages[static_cast<std::size_t>(i)] >
                            damages[static_cast<std::size_t>(best)])
          best = i;
      }
      chosen.push_back(best);
      in_set[static_cast<std::size_t>(best)] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    report.strategy = "greedy";
    report.indices = chosen;
  }

  DamageEngine engine(g);
  const auto after = engine.evaluate(kind, report.indices);
  report.damage =
      damage_from(base, after, options.normalization, g.node_count());
  report.disconnection =
      disconnection_from(base, after, options.disconnection);
  return report;
}

nlohmann::ordered_json element_json(const Snapshot& g, ElementKind kind,
                                    int index) {
  if (kind == ElementKind::node) return g.id_of(index);
  const auto& e = g.edges()[static_cast<std::size_t>(index)];
  return nlohmann::ordered_json::array({g.id_of(e.lo), g.id_of(e.hi)});
}

nlohmann::ordered_json damage_distribution_to_json(
    const DamageDistribution& d) {
  return nlohmann::ordered_json{
      {"year", d.year},
      {"kind", to_string(d.kind)},
      {"k", d.k},
      {"effective_k", d.effective_k},
      {"trials", d.trials},
      {"seed", d.seed},
      {"damage_max", d.damage_max},
      {"damage_mode", d.damage_mode},
      {"damage_mean", d.damage_mean},
      {"disconnection_max", d.disconnection_max},
      {"disconnection_mean", d.disconnection_mean},
      {"histogram",
       {{"bin_width", d.bin_width}, {"counts", d.histogram}}},
  };
}

std::string attack_csv_header() {
  return "year,kind,k,effective_k,trials,seed,damage_max,damage_mode,"
         "damage_mean,disconnection_max,disconnection_mean";
}

std::string attack_csv_row(const DamageDistribution& d) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "%d,%s,%d,%d,%d,%llu,%.6f,%.6f,%.6f,%.6f,%.6f", d.year,
                to_string(d.kind).c_str(), d.k, d.effective_k, d.trials,
                static_cast<unsigned long long>(d.seed), d.damage_max,
                d.damage_mode, d.damage_mean, d.disconnection_max,
                d.disconnection_mean);
  return buf;
}

}  // namespace gridnet
