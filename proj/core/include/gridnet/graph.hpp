#ifndef GRIDNET_GRAPH_HPP
#define GRIDNET_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace gridnet {

/// Marker for an unreachable pair in distance vectors/tables.
inline constexpr int kUnreachable = -1;

inline bool is_reachable(int d) { return d >= 0; }

/// Undirected edge as a pair of dense node indices, normalized lo < hi.
struct EdgeIx {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const EdgeIx&, const EdgeIx&) = default;
};

/// Immutable simple undirected graph for one year.
///
/// Node ids are mapped to dense indices 0..N-1 in strictly ascending id
/// order; the mapping is fixed at construction. Edges are stored once,
/// normalized and sorted, so edge index i names the same edge for the
/// snapshot's lifetime. Neighbor lists are sorted. Instances are immutable
/// after construction and safe to share across threads.
class Snapshot {
public:
  Snapshot() = default;

  /// Builds a snapshot from ids (strictly ascending, unique) and edges as
  /// index pairs. Throws std::invalid_argument on self-loops, duplicate
  /// edges, out-of-range indices or unsorted ids.
  static Snapshot build(std::vector<std::string> ids,
                        std::vector<EdgeIx> edges, int year = 0);

  int node_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int year() const { return year_; }

  std::span<const int> neighbors(int i) const {
    return {adjacency_[static_cast<std::size_t>(i)].data(),
            adjacency_[static_cast<std::size_t>(i)].size()};
  }
  int degree(int i) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
  }
  double avg_degree() const {
    return node_count() ? 2.0 * edge_count() / node_count() : 0.0;
  }

  /// Edges normalized (lo < hi) and sorted ascending; the position in this
  /// list is the edge's dense index.
  const std::vector<EdgeIx>& edges() const { return edges_; }

  const std::string& id_of(int i) const {
    return ids_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Dense index for an element id, if present.
  std::optional<int> index_of(std::string_view id) const;

private:
  std::vector<std::string> ids_;
  std::vector<EdgeIx> edges_;
  std::vector<std::vector<int>> adjacency_;
  int year_ = 0;
};

/// Hop distances from `source` to every node; kUnreachable where no path
/// exists. Throws std::out_of_range for a bad source.
std::vector<int> bfs_from(const Snapshot& g, int source);

/// Symmetric table of hop distances for all ordered pairs.
class DistanceTable {
public:
  DistanceTable() = default;
  DistanceTable(int n, std::vector<int> data)
      : n_(n), data_(std::move(data)) {}

  int size() const { return n_; }
  int at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

private:
  int n_ = 0;
  std::vector<int> data_;
};

/// Workers > 1 fans the per-source BFS out across threads; the result is
/// identical for any worker count. 0 = hardware concurrency.
DistanceTable all_pairs_distances(const Snapshot& g, int workers = 1);

struct ComponentInfo {
  std::vector<int> label;  // component label per node, assigned in
                           // ascending order of first contained node index
  int count = 0;
  int largest_label = 0;   // ties by smallest contained node index
  int largest_nodes = 0;
  int largest_edges = 0;   // edges with both endpoints in the largest
};

ComponentInfo connected_components(const Snapshot& g);

/// Longest shortest path inside the largest connected component.
/// Requires N >= 1; a single node or an edgeless graph has diameter 0.
int diameter(const Snapshot& g);

/// {year, nodes:[ids], edges:[[id_lo,id_hi]]} with ids in lexicographic
/// order, byte-stable across runs.
nlohmann::ordered_json snapshot_to_json(const Snapshot& g);

}  // namespace gridnet

#endif
