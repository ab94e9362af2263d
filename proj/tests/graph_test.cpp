#include "gridnet/graph.hpp"

#include <doctest.h>

#include <random>
#include <set>

#include "gridnet/generators.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace gridnet;

TEST_CASE("bfs distances on a path") {
  const auto g = testing::graph(3, {{0, 1}, {1, 2}});
  CHECK(bfs_from(g, 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("bfs marks unreachable nodes") {
  const auto g = testing::graph(4, {{0, 1}, {2, 3}});
  CHECK(bfs_from(g, 0) ==
        std::vector<int>{0, 1, kUnreachable, kUnreachable});
}

TEST_CASE("bfs on a complete graph") {
  const auto g = make_complete(4);
  for (int s = 0; s < 4; ++s) {
    const auto d = bfs_from(g, s);
    for (int i = 0; i < 4; ++i) CHECK(d[i] == (i == s ? 0 : 1));
  }
}

TEST_CASE("bfs rejects out-of-range sources") {
  const auto g = make_path(3);
  CHECK_THROWS_AS(bfs_from(g, 3), std::out_of_range);
  CHECK_THROWS_AS(bfs_from(g, -1), std::out_of_range);
}

TEST_CASE("all-pairs distances on C5 rows") {
  const auto g = make_ring(5);
  const auto t = all_pairs_distances(g);
  for (int i = 0; i < 5; ++i) {
    std::multiset<int> row;
    for (int j = 0; j < 5; ++j) row.insert(t.at(i, j));
    CHECK(row == std::multiset<int>{0, 1, 1, 2, 2});
    for (int j = 0; j < 5; ++j) CHECK(t.at(i, j) == t.at(j, i));
  }
}

TEST_CASE("all-pairs distances match the relaxation oracle") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(2, 7);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(size(rng), density(rng), rng);
    const auto got = all_pairs_distances(g, trial % 3 + 1);
    const auto want = oracle::relaxation_distances(g);
    for (int i = 0; i < g.node_count(); ++i) {
      for (int j = 0; j < g.node_count(); ++j) {
        if (want[i][j] == oracle::kInf)
          CHECK(got.at(i, j) == kUnreachable);
        else
          CHECK(got.at(i, j) == static_cast<int>(want[i][j]));
      }
    }
  }
}

TEST_CASE("connected components") {
  SUBCASE("two disjoint triangles") {
    const auto info = connected_components(testing::two_triangles());
    CHECK(info.count == 2);
    CHECK(info.largest_nodes == 3);
    CHECK(info.largest_edges == 3);
    CHECK(info.largest_label == 0);  // tie broken by smallest node index
  }
  SUBCASE("edgeless graph") {
    const auto info = connected_components(testing::graph(4, {}));
    CHECK(info.count == 4);
    CHECK(info.largest_nodes == 1);
    CHECK(info.largest_edges == 0);
  }
  SUBCASE("three isolated survivors of a dismantled star") {
    const auto info = connected_components(testing::graph(3, {}));
    CHECK(info.count == 3);
    CHECK(info.largest_nodes == 1);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(make_path(6)) == 5);
  CHECK(diameter(make_complete(4)) == 1);
  CHECK(diameter(testing::two_triangles()) == 1);  // largest component only
  CHECK(diameter(make_path(1)) == 0);
}

TEST_CASE("diameter of random trees equals the double-BFS oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(2, 40);
    const int n = size(rng);
    std::vector<EdgeIx> edges;
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      const int p = parent(rng);
      edges.push_back({std::min(p, v), std::max(p, v)});
    }
    const auto g = testing::graph(n, std::move(edges));
    const int d = diameter(g);
    CHECK(d == oracle::double_bfs_diameter(g));
    CHECK(d <= n - 1);
  }
}

TEST_CASE("generators") {
  SUBCASE("star degrees") {
    const auto g = make_star(4);
    std::multiset<int> degrees;
    for (int i = 0; i < 4; ++i) degrees.insert(g.degree(i));
    CHECK(degrees == std::multiset<int>{1, 1, 1, 3});
  }
  SUBCASE("erdos_renyi with p=1 is complete") {
    const auto g = make_erdos_renyi(50, 1.0, 123);
    CHECK(g.edge_count() == 50 * 49 / 2);
  }
  SUBCASE("preferential attachment is deterministic per seed") {
    const auto a = make_preferential_attachment(200, 2, 99);
    const auto b = make_preferential_attachment(200, 2, 99);
    CHECK(a.edges() == b.edges());
    const auto c = make_preferential_attachment(200, 2, 100);
    CHECK(a.edges() != c.edges());
  }
  SUBCASE("gnm produces the exact edge count") {
    const auto g = make_gnm(400, 774, 5);
    CHECK(g.node_count() == 400);
    CHECK(g.edge_count() == 774);
  }
  SUBCASE("ring lattice with 6 neighbors") {
    const auto g = make_ring(20, 6);
    for (int i = 0; i < 20; ++i) CHECK(g.degree(i) == 6);
  }
  SUBCASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_ring(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_erdos_renyi(5, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_gnm(4, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_preferential_attachment(2, 2, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("handshake identity over generated and random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(2, 30);
    const auto g = oracle::random_graph(size(rng), 0.3, rng);
    long long degree_sum = 0;
    for (int i = 0; i < g.node_count(); ++i) degree_sum += g.degree(i);
    CHECK(degree_sum == 2LL * g.edge_count());
  }
  const auto ba = make_preferential_attachment(300, 3, 4);
  long long degree_sum = 0;
  for (int i = 0; i < ba.node_count(); ++i) degree_sum += ba.degree(i);
  CHECK(degree_sum == 2LL * ba.edge_count());
}

TEST_CASE("snapshot construction validates input") {
  CHECK_THROWS_AS(Snapshot::build({"a", "b"}, {{0, 0}}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Snapshot::build({"a", "b"}, {{0, 1}, {1, 0}}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Snapshot::build({"b", "a"}, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Snapshot::build({"a", "b"}, {{0, 2}}, 0),
                  std::invalid_argument);
}

TEST_CASE("snapshot id lookup") {
  const auto g = testing::graph(3, {{0, 1}});
  CHECK(g.index_of("2") == 1);
  CHECK_FALSE(g.index_of("zzz").has_value());
}

TEST_CASE("snapshot json export is ordered and byte-stable") {
  const auto g = testing::graph(3, {{1, 2}, {0, 1}}, 1999);
  const auto a = snapshot_to_json(g).dump();
  const auto b = snapshot_to_json(g).dump();
  CHECK(a == b);
  CHECK(a ==
        R"({"year":1999,"nodes":["1","2","3"],"edges":[["1","2"],["2","3"]]})");
}
