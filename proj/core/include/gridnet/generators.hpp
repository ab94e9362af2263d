#ifndef GRIDNET_GENERATORS_HPP
#define GRIDNET_GENERATORS_HPP

#include <cstdint>

#include "gridnet/graph.hpp"
#include "gridnet/grid_data.hpp"

namespace gridnet {

/// Deterministic graph generators used as analysis fixtures. Node ids are
/// zero-padded ("n000", ...) so lexicographic id order equals index order.
/// Seeded models produce identical edge sets for identical seeds.

Snapshot make_path(int n, int year = 0);
Snapshot make_star(int n, int year = 0);  // node 0 is the hub
Snapshot make_complete(int n, int year = 0);

/// Ring lattice: every node linked to `neighbors`/2 nodes on each side
/// (neighbors even, < n). neighbors=2 is the plain cycle.
Snapshot make_ring(int n, int neighbors = 2, int year = 0);

/// G(n, p): each pair drawn independently with probability p.
Snapshot make_erdos_renyi(int n, double p, std::uint64_t seed, int year = 0);

/// G(n, m): exactly m distinct edges sampled uniformly.
Snapshot make_gnm(int n, int m, std::uint64_t seed, int year = 0);

/// Growth with degree-proportional attachment, m_attach edges per new node,
/// seeded from a (m_attach+1)-clique.
Snapshot make_preferential_attachment(int n, int m_attach,
                                      std::uint64_t seed, int year = 0);

/// Converts a single snapshot into a one-year temporal dataset (every
/// element commissioned in `year`, never decommissioned).
TemporalDataset to_dataset(const Snapshot& g);

/// Synthetic evolving grid for longitudinal tests: starts as a small ring,
/// grows by nodes attaching to one or two existing nodes, and closes more
/// and more triangles as years pass, so size and clustering rise while the
/// damage a removal can do falls.
struct GrowingGridParams {
  int start_year = 1949;
  int end_year = 2019;
  int growth_per_year = 3;      // nodes added each year after the first
  double second_link_prob = 0.3;
  double chords_per_year_step = 0.08;  // chord budget grows by this per year
  std::uint64_t seed = 1;
};

TemporalDataset generate_growing_grid(const GrowingGridParams& params);

}  // namespace gridnet

#endif
