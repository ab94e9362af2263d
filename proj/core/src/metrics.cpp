#include "gridnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "gridnet/errors.hpp"
#include "gridnet/rng.hpp"

namespace gridnet {

Partition Partition::from_labels(std::vector<int> raw) {
  Partition p;
  p.labels.assign(raw.size(), -1);
  std::map<int, int> remap;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = remap.emplace(raw[i], p.count);
    if (inserted) ++p.count;
    p.labels[i] = it->second;
  }
  return p;
}

Partition Partition::single_community(int n) {
  Partition p;
  p.labels.assign(static_cast<std::size_t>(n), 0);
  p.count = n > 0 ? 1 : 0;
  return p;
}

double efficiency(const Snapshot& g) {
  const int n = g.node_count();
  if (n < 2)
    throw UndefinedMetricError("efficiency undefined for fewer than 2 nodes");
  double sum = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto dist = bfs_from(g, s);
    for (int d : dist)
      if (d > 0) sum += 1.0 / d;
  }
  return sum / (static_cast<double>(n) * (n - 1));
}

double avg_path_length(const Snapshot& g) {
  if (g.edge_count() < 1)
    throw UndefinedMetricError(
        "average path length undefined without reachable pairs");
  double sum = 0.0;
  long long pairs = 0;
  const int n = g.node_count();
  for (int s = 0; s < n; ++s) {
    const auto dist = bfs_from(g, s);
    for (int d : dist) {
      if (d > 0) {
        sum += d;
        ++pairs;
      }
    }
  }
  return sum / static_cast<double>(pairs);
}

double clustering(const Snapshot& g) {
  const int n = g.node_count();
  if (n < 1)
    throw UndefinedMetricError("clustering undefined for an empty graph");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto nbrs = g.neighbors(i);
    const int k = static_cast<int>(nbrs.size());
    if (k < 2) continue;
    int links = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      const auto na = g.neighbors(nbrs[a]);
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (std::binary_search(na.begin(), na.end(), nbrs[b])) ++links;
    }
    sum += 2.0 * links / (static_cast<double>(k) * (k - 1));
  }
  return sum / n;
}

double modularity(const Snapshot& g, const Partition& p,
                  ModularityNorm norm) {
  const int n = g.node_count();
  if (static_cast<int>(p.labels.size()) != n)
    throw std::invalid_argument("partition labels one node each: got " +
                                std::to_string(p.labels.size()) + " for " +
                                std::to_string(n) + " nodes");
  const int m = g.edge_count();
  if (m < 1)
    throw UndefinedMetricError("modularity undefined without edges");

  std::vector<double> intra(static_cast<std::size_t>(p.count), 0.0);
  std::vector<double> degree_sum(static_cast<std::size_t>(p.count), 0.0);
  for (const auto& e : g.edges())
    if (p.labels[static_cast<std::size_t>(e.lo)] ==
        p.labels[static_cast<std::size_t>(e.hi)])
      intra[static_cast<std::size_t>(
          p.labels[static_cast<std::size_t>(e.lo)])] += 1.0;
  for (int i = 0; i < n; ++i)
    degree_sum[static_cast<std::size_t>(p.labels[static_cast<std::size_t>(i)])] +=
        g.degree(i);

  // norm = 2E for the standard null model; the printed variant divides by
  // the average degree instead, kept only for comparison runs.
  const double divisor = norm == ModularityNorm::standard
                             ? 2.0 * m
                             : 2.0 * m / static_cast<double>(n);
  double q = 0.0;
  for (int c = 0; c < p.count; ++c) {
    const double dc = degree_sum[static_cast<std::size_t>(c)];
    q += 2.0 * intra[static_cast<std::size_t>(c)] / divisor -
         (dc / divisor) * (dc / divisor);
  }
  return q;
}

Partition detect_communities(const Snapshot& g, std::uint64_t seed) {
  const int n = g.node_count();
  const int m = g.edge_count();
  if (m < 1)
    throw UndefinedMetricError(
        "community detection undefined without edges");

  // Community state, keyed by the smallest node index it contains.
  std::vector<std::map<int, double>> between(static_cast<std::size_t>(n));
  std::vector<double> degree_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (const auto& e : g.edges()) {
    between[static_cast<std::size_t>(e.lo)][e.hi] += 1.0;
    between[static_cast<std::size_t>(e.hi)][e.lo] += 1.0;
  }
  for (int i = 0; i < n; ++i) degree_sum[static_cast<std::size_t>(i)] = g.degree(i);

  const double m2 = 2.0 * m;
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = degree_sum[static_cast<std::size_t>(i)] / m2;
    q -= a * a;
  }

  std::vector<std::pair<int, int>> merges;  // (absorbed, into)
  double best_q = q;
  std::size_t best_step = 0;

  while (true) {
    double best_dq = 0.0;
    int best_c = -1, best_d = -1;
    std::uint64_t best_tie = 0;
    bool found = false;
    for (int c = 0; c < n; ++c) {
      if (!alive[static_cast<std::size_t>(c)]) continue;
      for (const auto& [d, cnt] : between[static_cast<std::size_t>(c)]) {
        if (d <= c) continue;
        const double dq = cnt / m -
                          degree_sum[static_cast<std::size_t>(c)] *
                              degree_sum[static_cast<std::size_t>(d)] /
                              (2.0 * m * m);
        const std::uint64_t tie =
            mix_seed(seed, static_cast<std::uint64_t>(c),
                     static_cast<std::uint64_t>(d));
        if (!found || dq > best_dq ||
            (dq == best_dq && (tie < best_tie ||
                               (tie == best_tie &&
                                std::pair(c, d) < std::pair(best_c, best_d))))) {
          found = true;
          best_dq = dq;
          best_c = c;
          best_d = d;
          best_tie = tie;
        }
      }
    }
    if (!found) break;

    // Absorb d into c (c < d), folding d's links into c's.
    alive[static_cast<std::size_t>(best_d)] = 0;
    auto& mc = between[static_cast<std::size_t>(best_c)];
    auto& md = between[static_cast<std::size_t>(best_d)];
    mc.erase(best_d);
    for (const auto& [other, cnt] : md) {
      if (other == best_c) continue;
      mc[other] += cnt;
      auto& mo = between[static_cast<std::size_t>(other)];
      mo.erase(best_d);
      mo[best_c] += cnt;
    }
    md.clear();
    degree_sum[static_cast<std::size_t>(best_c)] +=
        degree_sum[static_cast<std::size_t>(best_d)];
    q += best_dq;
    merges.emplace_back(best_d, best_c);
    if (q > best_q) {
      best_q = q;
      best_step = merges.size();
    }
  }

  // Replay the merge prefix that scored best.
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t s = 0; s < best_step; ++s)
    parent[static_cast<std::size_t>(merges[s].first)] = merges[s].second;
  std::vector<int> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = find(i);
  return Partition::from_labels(std::move(roots));
}

Snapshot degree_preserving_rewire(const Snapshot& g, std::uint64_t seed,
                                  int swaps_per_edge) {
  auto rng = make_rng(seed);
  std::vector<EdgeIx> edges = g.edges();
  if (edges.size() < 2) return g;
  std::set<std::pair<int, int>> present;
  for (const auto& e : edges) present.insert({e.lo, e.hi});

  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::uniform_int_distribution<int> orient(0, 1);
  const long long attempts =
      static_cast<long long>(swaps_per_edge) * static_cast<long long>(edges.size());
  for (long long t = 0; t < attempts; ++t) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    int a = edges[i].lo, b = edges[i].hi;
    int c = edges[j].lo, d = edges[j].hi;
    if (orient(rng)) std::swap(c, d);
    // Proposed replacement: (a,d) and (c,b).
    if (a == d || c == b) continue;
    const std::pair<int, int> e1{std::min(a, d), std::max(a, d)};
    const std::pair<int, int> e2{std::min(c, b), std::max(c, b)};
    if (e1 == e2) continue;
    if (present.count(e1) || present.count(e2)) continue;
    present.erase({edges[i].lo, edges[i].hi});
    present.erase({edges[j].lo, edges[j].hi});
    present.insert(e1);
    present.insert(e2);
    edges[i] = {e1.first, e1.second};
    edges[j] = {e2.first, e2.second};
  }
  return Snapshot::build(g.ids(), std::move(edges), g.year());
}

double small_world_sigma(const Snapshot& g, SigmaBaseline baseline,
                         std::uint64_t seed, int ensemble_size) {
  const int n = g.node_count();
  if (n < 4)
    throw UndefinedMetricError(
        "small-world coefficient undefined for fewer than 4 nodes");
  const double k = g.avg_degree();
  if (k <= 1.0)
    throw UndefinedMetricError(
        "small-world coefficient undefined for average degree <= 1");

  const double c = clustering(g);
  const double l = avg_path_length(g);

  double c_rand = 0.0, l_rand = 0.0;
  if (baseline == SigmaBaseline::analytic) {
    c_rand = k / n;
    l_rand = std::log(static_cast<double>(n)) / std::log(k);
  } else {
    if (ensemble_size < 1)
      throw std::invalid_argument("ensemble size must be >= 1");
    for (int i = 0; i < ensemble_size; ++i) {
      const auto r = degree_preserving_rewire(
          g, mix_seed(seed, static_cast<std::uint64_t>(i)));
      c_rand += clustering(r);
      l_rand += avg_path_length(r);
    }
    c_rand /= ensemble_size;
    l_rand /= ensemble_size;
    if (c_rand <= 0.0)
      throw UndefinedMetricError(
          "ensemble baseline clustering is zero; sigma undefined");
  }
  return (c / c_rand) / (l / l_rand);
}

MetricsReport compute_metrics(const Snapshot& g,
                              const MetricsOptions& options) {
  MetricsReport r;
  r.year = g.year();
  r.n = g.node_count();
  r.m = g.edge_count();
  r.avg_degree = g.avg_degree();
  r.diameter = diameter(g);
  r.modularity =
      modularity(g, detect_communities(g, options.seed),
                 options.modularity_norm);
  r.avg_path_length = avg_path_length(g);
  r.clustering = clustering(g);
  r.small_world = small_world_sigma(g, options.sigma_baseline, options.seed,
                                    options.sigma_ensemble);
  r.efficiency = efficiency(g);
  return r;
}

std::string metrics_csv_header() {
  return "year,n,m,avg_degree,diameter,Q,L,C,sigma,eff";
}

std::string metrics_csv_row(const MetricsReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%d,%d,%d,%.6f,%d,%.6f,%.6f,%.6f,%.6f,%.6f", r.year, r.n,
                r.m, r.avg_degree, r.diameter, r.modularity,
                r.avg_path_length, r.clustering, r.small_world,
                r.efficiency);
  return buf;
}

nlohmann::ordered_json metrics_to_json(const MetricsReport& r) {
  return nlohmann::ordered_json{
      {"year", r.year},
      {"n", r.n},
      {"m", r.m},
      {"avg_degree", r.avg_degree},
      {"diameter", r.diameter},
      {"Q", r.modularity},
      {"L", r.avg_path_length},
      {"C", r.clustering},
      {"sigma", r.small_world},
      {"eff", r.efficiency},
  };
}

}  // namespace gridnet
