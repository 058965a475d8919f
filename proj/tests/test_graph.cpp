#include <gtest/gtest.h>

#include <sstream>

#include "netfunc/error.hpp"
#include "netfunc/generators.hpp"
#include "netfunc/graph.hpp"
#include "netfunc/graph_io.hpp"
#include "netfunc/rng.hpp"
#include "oracles.hpp"

using namespace netfunc;

namespace {

Graph octahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != u + 3) edges.emplace_back(u, v);
  return Graph::from_edge_list(6, edges);
}

std::vector<Vertex> sorted_parent_ids(const Subgraph& s) {
  auto ids = s.to_parent;
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST(Graph, FromEdgeListBuildsTriangle) {
  const auto g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_EQ(g.size(), 3u);
}

TEST(Graph, SymmetricPairIsDeduplicated) {
  const auto g = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, LoopRejected) {
  try {
    Graph::from_edge_list(2, {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LoopEdge);
  }
}

TEST(Graph, OutOfRangeRejected) {
  try {
    Graph::from_edge_list(2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
  }
}

TEST(Graph, NeighborsSortedAndSymmetric) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto g = erdos_renyi(12, 0.4, rng.next());
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto nb = g.neighbors(x);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex y : nb) EXPECT_TRUE(g.adjacent(y, x));
    }
  }
}

TEST(Distances, Examples) {
  const auto k4 = all_pairs_distances(complete_graph(4));
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 4; ++j) EXPECT_EQ(k4(i, j), i == j ? 0u : 1u);
  EXPECT_EQ(all_pairs_distances(path_graph(3))(0, 2), 2u);
  const auto two = all_pairs_distances(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(two(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_FALSE(two.reachable(1, 3));
}

TEST(Distances, MatchFloydWarshallOnRandomGraphs) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto g = erdos_renyi(3 + rng.below(12), 0.05 + 0.9 * rng.uniform(), rng.next());
    const auto d = all_pairs_distances(g);
    const auto f = oracle::floyd_warshall(g);
    for (Vertex i = 0; i < g.order(); ++i)
      for (Vertex j = 0; j < g.order(); ++j) {
        if (f[i][j] >= oracle::kInf) EXPECT_FALSE(d.reachable(i, j));
        else EXPECT_EQ(d(i, j), static_cast<std::uint32_t>(f[i][j]));
      }
  }
}

TEST(Distances, MetricProperties) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto g = erdos_renyi(10, 0.3, rng.next());
    const auto d = all_pairs_distances(g);
    for (Vertex i = 0; i < 10; ++i)
      for (Vertex j = 0; j < 10; ++j) {
        EXPECT_EQ(d(i, j), d(j, i));
        for (Vertex k = 0; k < 10; ++k)
          if (d.reachable(i, k) && d.reachable(k, j)) EXPECT_LE(d(i, j), d(i, k) + d(k, j));
      }
  }
}

TEST(SphereBall, Examples) {
  EXPECT_EQ(sphere(complete_graph(4), 2).graph, complete_graph(3));
  const auto c5 = sphere(cycle_graph(5), 0);
  EXPECT_EQ(c5.graph.order(), 2u);
  EXPECT_EQ(c5.graph.size(), 0u);

  // W_5: hub sphere is the rim cycle.
  const auto w5 = wheel_graph(5);
  Vertex hub = 0;
  for (Vertex v = 0; v < w5.order(); ++v)
    if (w5.degree(v) == 5) hub = v;
  const auto rim = sphere(w5, hub).graph;
  EXPECT_EQ(rim.order(), 5u);
  EXPECT_EQ(rim.size(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(rim.degree(v), 2u);

  EXPECT_EQ(ball(complete_graph(4), 1).graph, complete_graph(4));
  const auto b = ball(cycle_graph(5), 0);
  EXPECT_EQ(b.graph.order(), 3u);
  EXPECT_EQ(b.graph.size(), 2u);
  EXPECT_EQ(sorted_parent_ids(b), (std::vector<Vertex>{0, 1, 4}));
  const auto s4 = star_graph(4);
  EXPECT_EQ(ball(s4, 0).graph, s4);
}

TEST(InducedSubgraph, Examples) {
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_EQ(induced_subgraph(complete_graph(4), tri).graph, complete_graph(3));
  const std::vector<Vertex> evens{0, 2, 4};
  const auto s = induced_subgraph(cycle_graph(6), evens);
  EXPECT_EQ(s.graph.order(), 3u);
  EXPECT_EQ(s.graph.size(), 0u);
  EXPECT_EQ(induced_subgraph(complete_graph(5), std::vector<Vertex>{}).graph.order(), 0u);
}

TEST(InducedSubgraph, EdgesAreExactlyParentEdges) {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(10, 0.5, rng.next());
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 10; ++v)
      if (rng.uniform() < 0.5) subset.push_back(v);
    const auto s = induced_subgraph(g, subset);
    for (Vertex i = 0; i < s.graph.order(); ++i)
      for (Vertex j = 0; j < s.graph.order(); ++j)
        if (i != j) EXPECT_EQ(s.graph.adjacent(i, j), g.adjacent(s.to_parent[i], s.to_parent[j]));
  }
}

TEST(SimplexCounts, Examples) {
  EXPECT_EQ(simplex_counts(complete_graph(4)).counts, (std::vector<std::uint64_t>{4, 6, 4, 1}));
  EXPECT_EQ(simplex_counts(cycle_graph(5)).counts, (std::vector<std::uint64_t>{5, 5}));
  EXPECT_EQ(simplex_counts(octahedron()).counts, (std::vector<std::uint64_t>{6, 12, 8}));
}

TEST(SimplexCounts, MatchSubsetEnumeration) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto g = erdos_renyi(2 + rng.below(11), rng.uniform(), rng.next());
    EXPECT_EQ(simplex_counts(g).counts, oracle::clique_counts(g));
  }
}

TEST(SimplexCounts, BudgetExceeded) {
  try {
    simplex_counts(complete_graph(12), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CliqueBudgetExceeded);
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(complete_graph(5)).size(), 1u);
  const auto two = connected_components(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 3u);
  EXPECT_EQ(two[1].size(), 3u);
  EXPECT_EQ(connected_components(Graph::from_edge_list(3, {})).size(), 3u);
}

TEST(Components, PartitionVertices) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(15, 0.1, rng.next());
    std::vector<int> seen(15, 0);
    for (const auto& c : connected_components(g))
      for (Vertex v : c) ++seen[v];
    for (int s : seen) EXPECT_EQ(s, 1);
    EXPECT_EQ(is_connected(g), oracle::connected(g));
  }
}

TEST(Diameter, Basics) {
  EXPECT_EQ(diameter(path_graph(6)), 5u);
  EXPECT_EQ(diameter(cycle_graph(7)), 3u);
  EXPECT_THROW(diameter(Graph::from_edge_list(3, {{0, 1}})), Error);
}

TEST(Relabel, PreservesStructure) {
  const auto g = path_graph(4);
  const std::vector<Vertex> perm{3, 2, 1, 0};
  const auto r = relabel(g, perm);
  EXPECT_EQ(r.size(), 3u);
  EXPECT_TRUE(r.adjacent(3, 2));
  EXPECT_EQ(simplex_counts(r).counts, simplex_counts(g).counts);
}

TEST(EdgeListIo, RoundTrip) {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto g = erdos_renyi(20, 0.2, rng.next());
    std::stringstream buf;
    write_edge_list(buf, g, "model=er\nsecond line");
    EXPECT_EQ(read_edge_list(buf), g);
  }
}

TEST(EdgeListIo, LoopLineReportsLineNumber) {
  std::istringstream in("# comment\nn 3\n0 1\n2 2\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(EdgeListIo, MalformedInput) {
  for (const char* text : {"0 1\n", "n 3\n0 x\n", "n 2\n0 5\n", "n 3\n0 1 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in), ParseError) << text;
  }
}

TEST(Distances, DistanceOneIffEdgeAndZeroDiagonal) {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(12, rng.uniform(), rng.next());
    const auto d = all_pairs_distances(g);
    for (Vertex i = 0; i < 12; ++i)
      for (Vertex j = 0; j < 12; ++j) {
        EXPECT_EQ(d(i, j) == 1, g.adjacent(i, j));
        if (i == j) EXPECT_EQ(d(i, j), 0u);
      }
  }
}

TEST(Distances, ExhaustiveFloydWarshallUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      const auto d = all_pairs_distances(g);
      const auto f = oracle::floyd_warshall(g);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) ASSERT_EQ(d(i, j), static_cast<std::uint32_t>(f[i][j]));
    });
}

TEST(SimplexCounts, LeadingEntriesAreVerticesAndEdges) {
  Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(1 + rng.below(15), rng.uniform(), rng.next());
    const auto c = simplex_counts(g).counts;
    ASSERT_GE(c.size(), 1u);
    EXPECT_EQ(c[0], g.order());
    EXPECT_EQ(c.size() > 1 ? c[1] : 0u, g.size());
  }
}

TEST(SphereBall, SizesFollowDegree) {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    const auto g = erdos_renyi(12, rng.uniform(), rng.next());
    for (Vertex x = 0; x < 12; ++x) {
      EXPECT_EQ(sphere(g, x).graph.order(), g.degree(x));
      EXPECT_EQ(ball(g, x).graph.order(), g.degree(x) + 1);
    }
  }
}
