#include "gridnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "gridnet/parallel.hpp"

namespace gridnet {

Snapshot Snapshot::build(std::vector<std::string> ids,
                         std::vector<EdgeIx> edges, int year) {
  const int n = static_cast<int>(ids.size());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (!(ids[i - 1] < ids[i]))
      throw std::invalid_argument("node ids must be strictly ascending");
  }
  for (auto& e : edges) {
    if (e.lo > e.hi) std::swap(e.lo, e.hi);
    if (e.lo == e.hi)
      throw std::invalid_argument("self-loop at node index " +
                                  std::to_string(e.lo));
    if (e.lo < 0 || e.hi >= n)
      throw std::invalid_argument("edge endpoint index out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  Snapshot g;
  g.ids_ = std::move(ids);
  g.edges_ = std::move(edges);
  g.year_ = year;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (const auto& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    g.adjacency_[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::optional<int> Snapshot::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

std::vector<int> bfs_from(const Snapshot& g, int source) {
  const int n = g.node_count();
  if (source < 0 || source >= n)
    throw std::out_of_range("bfs source " + std::to_string(source) +
                            " out of range for " + std::to_string(n) +
                            " nodes");
  std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const int du = dist[static_cast<std::size_t>(u)];
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        dist[static_cast<std::size_t>(v)] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceTable all_pairs_distances(const Snapshot& g, int workers) {
  const int n = g.node_count();
  std::vector<int> data(static_cast<std::size_t>(n) * n, kUnreachable);
  parallel_chunks(n, workers, [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t s = begin; s < end; ++s) {
      auto row = bfs_from(g, static_cast<int>(s));
      std::copy(row.begin(), row.end(),
                data.begin() + static_cast<std::size_t>(s) * n);
    }
  });
  return DistanceTable(n, std::move(data));
}

ComponentInfo connected_components(const Snapshot& g) {
  const int n = g.node_count();
  ComponentInfo info;
  info.label.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  std::vector<int> comp_nodes;
  for (int start = 0; start < n; ++start) {
    if (info.label[static_cast<std::size_t>(start)] != -1) continue;
    const int label = info.count++;
    int nodes = 0;
    queue.clear();
    queue.push_back(start);
    info.label[static_cast<std::size_t>(start)] = label;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++nodes;
      for (int v : g.neighbors(queue[head])) {
        if (info.label[static_cast<std::size_t>(v)] == -1) {
          info.label[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
    comp_nodes.push_back(nodes);
  }
  // First label among the biggest components wins: labels are assigned in
  // ascending order of first contained node index.
  for (int c = 0; c < info.count; ++c) {
    if (comp_nodes[static_cast<std::size_t>(c)] > info.largest_nodes) {
      info.largest_nodes = comp_nodes[static_cast<std::size_t>(c)];
      info.largest_label = c;
    }
  }
  for (const auto& e : g.edges()) {
    if (info.label[static_cast<std::size_t>(e.lo)] == info.largest_label)
      ++info.largest_edges;
  }
  return info;
}

int diameter(const Snapshot& g) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("diameter of an empty graph");
  const auto comps = connected_components(g);
  int best = 0;
  for (int s = 0; s < n; ++s) {
    if (comps.label[static_cast<std::size_t>(s)] != comps.largest_label)
      continue;
    const auto dist = bfs_from(g, s);
    for (int d : dist) best = std::max(best, d);
  }
  return best;
}

nlohmann::ordered_json snapshot_to_json(const Snapshot& g) {
  nlohmann::ordered_json j;
  j["year"] = g.year();
  j["nodes"] = g.ids();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    edges.push_back({g.id_of(e.lo), g.id_of(e.hi)});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace gridnet
