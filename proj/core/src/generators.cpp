#include "gridnet/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gridnet/rng.hpp"

namespace gridnet {

namespace {

std::string padded_id(char prefix, int index, int width) {
  std::string digits = std::to_string(index);
  std::string out(1, prefix);
  out.append(static_cast<std::size_t>(width) - digits.size(), '0');
  out += digits;
  return out;
}

int id_width(int count) {
  int width = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++width;
  return width;
}

std::vector<std::string> node_ids(int n) {
  const int width = id_width(n);
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids.push_back(padded_id('n', i, width));
  return ids;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Snapshot make_path(int n, int year) {
  require(n >= 1, "path: n >= 1 required");
  std::vector<EdgeIx> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

Snapshot make_star(int n, int year) {
  require(n >= 1, "star: n >= 1 required");
  std::vector<EdgeIx> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

Snapshot make_complete(int n, int year) {
  require(n >= 1, "complete: n >= 1 required");
  std::vector<EdgeIx> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

Snapshot make_ring(int n, int neighbors, int year) {
  require(n >= 3, "ring: n >= 3 required");
  require(neighbors >= 2 && neighbors % 2 == 0,
          "ring: neighbors must be even and >= 2");
  require(neighbors < n, "ring: neighbors must be < n");
  std::vector<EdgeIx> edges;
  for (int i = 0; i < n; ++i) {
    for (int h = 1; h <= neighbors / 2; ++h) {
      int j = (i + h) % n;
      edges.push_back({std::min(i, j), std::max(i, j)});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

Snapshot make_erdos_renyi(int n, double p, std::uint64_t seed, int year) {
  require(n >= 1, "erdos_renyi: n >= 1 required");
  require(p >= 0.0 && p <= 1.0, "erdos_renyi: p must be in [0,1]");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<EdgeIx> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.push_back({i, j});
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

Snapshot make_gnm(int n, int m, std::uint64_t seed, int year) {
  require(n >= 1, "gnm: n >= 1 required");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  require(m >= 0 && m <= max_edges, "gnm: m exceeds the possible edge count");
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::set<EdgeIx> edges;
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  return Snapshot::build(node_ids(n), {edges.begin(), edges.end()}, year);
}

Snapshot make_preferential_attachment(int n, int m_attach,
                                      std::uint64_t seed, int year) {
  require(m_attach >= 1, "preferential_attachment: m >= 1 required");
  require(n > m_attach, "preferential_attachment: n must exceed m");
  auto rng = make_rng(seed);
  std::vector<EdgeIx> edges;
  std::vector<int> endpoint_pool;  // each node appears once per incident edge

  const int seed_nodes = m_attach + 1;
  for (int i = 0; i < seed_nodes; ++i) {
    for (int j = i + 1; j < seed_nodes; ++j) {
      edges.push_back({i, j});
      endpoint_pool.push_back(i);
      endpoint_pool.push_back(j);
    }
  }
  std::vector<int> targets;
  for (int v = seed_nodes; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m_attach) {
      std::uniform_int_distribution<std::size_t> pick(
          0, endpoint_pool.size() - 1);
      int candidate = endpoint_pool[pick(rng)];
      if (std::find(targets.begin(), targets.end(), candidate) ==
          targets.end())
        targets.push_back(candidate);
    }
    for (int t : targets) {
      edges.push_back({t, v});
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(v);
    }
  }
  return Snapshot::build(node_ids(n), std::move(edges), year);
}

TemporalDataset to_dataset(const Snapshot& g) {
  TemporalDataset ds;
  const int year = g.year();
  for (const auto& id : g.ids())
    ds.nodes.push_back({id, "", year, {}, {}, {}, {}});
  const int width = id_width(std::max(1, g.edge_count()));
  int next = 0;
  for (const auto& e : g.edges()) {
    ds.edges.push_back({padded_id('e', next++, width), g.id_of(e.lo),
                        g.id_of(e.hi), year, {}, {}});
  }
  ds.first_year = year;
  ds.last_year = year;
  return ds;
}

TemporalDataset generate_growing_grid(const GrowingGridParams& params) {
  require(params.end_year > params.start_year,
          "growing grid: end_year must exceed start_year");
  require(params.growth_per_year >= 1,
          "growing grid: growth_per_year >= 1 required");
  auto rng = make_rng(params.seed);

  // Node i was commissioned in node_year[i]; edges likewise.
  std::vector<int> node_year;
  struct PendingEdge {
    int a, b, year;
  };
  std::vector<PendingEdge> pending;
  std::set<std::pair<int, int>> edge_set;
  std::vector<std::vector<int>> adj;

  auto add_node = [&](int year) {
    node_year.push_back(year);
    adj.emplace_back();
    return static_cast<int>(node_year.size()) - 1;
  };
  auto add_edge = [&](int a, int b, int year) {
    if (a == b) return false;
    auto key = std::minmax(a, b);
    if (!edge_set.insert({key.first, key.second}).second) return false;
    pending.push_back({key.first, key.second, year});
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
    return true;
  };

  // First year: a 4-node ring. Zero clustering, so later chords can only
  // raise C.
  for (int i = 0; i < 4; ++i) add_node(params.start_year);
  add_edge(0, 1, params.start_year);
  add_edge(1, 2, params.start_year);
  add_edge(2, 3, params.start_year);
  add_edge(3, 0, params.start_year);

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double chord_budget = 0.0;
  const int years = params.end_year - params.start_year;
  for (int step = 1; step <= years; ++step) {
    const int year = params.start_year + step;
    for (int grow = 0; grow < params.growth_per_year; ++grow) {
      const int existing = static_cast<int>(node_year.size());
      std::uniform_int_distribution<int> pick(0, existing - 1);
      const int v = add_node(year);
      const int first = pick(rng);
      add_edge(v, first, year);
      if (coin(rng) < params.second_link_prob) {
        const int second = pick(rng);
        if (second != first) add_edge(v, second, year);
      }
    }
    // The chord rate grows linearly with age, so total clustering keeps
    // climbing even as the node count grows.
    chord_budget += params.chords_per_year_step * step;
    while (chord_budget >= 1.0) {
      chord_budget -= 1.0;
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::uniform_int_distribution<int> pick(
            0, static_cast<int>(node_year.size()) - 1);
        const int u = pick(rng);
        const auto& nbrs = adj[static_cast<std::size_t>(u)];
        if (nbrs.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pn(0, nbrs.size() - 1);
        const int a = nbrs[pn(rng)];
        const int b = nbrs[pn(rng)];
        if (a == b) continue;
        if (add_edge(a, b, year)) break;
      }
    }
  }

  TemporalDataset ds;
  const int node_width = id_width(static_cast<int>(node_year.size()));
  for (std::size_t i = 0; i < node_year.size(); ++i)
    ds.nodes.push_back({padded_id('n', static_cast<int>(i), node_width), "",
                        node_year[i], {}, {}, {}, {}});
  const int edge_width = id_width(static_cast<int>(pending.size()));
  const int node_id_width = node_width;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    ds.edges.push_back({padded_id('e', static_cast<int>(i), edge_width),
                        padded_id('n', pending[i].a, node_id_width),
                        padded_id('n', pending[i].b, node_id_width),
                        pending[i].year,
                        {},
                        {}});
  }
  ds.first_year = params.start_year;
  ds.last_year = params.end_year;
  return ds;
}

}  // namespace gridnet
