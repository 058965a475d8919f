#include <gtest/gtest.h>

#include <cmath>

#include "netfunc/error.hpp"
#include "netfunc/generators.hpp"
#include "netfunc/metric.hpp"
#include "netfunc/rng.hpp"
#include "oracles.hpp"

using namespace netfunc;

namespace {

Rational R(long long num, long long den = 1) { return Rational(num) / Rational(den); }

std::vector<Graph> deterministic_families() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 9; ++n) {
    out.push_back(complete_graph(n));
    out.push_back(path_graph(n));
    out.push_back(star_graph(n));
    if (n >= 3) out.push_back(cycle_graph(n));
    if (n >= 3) out.push_back(wheel_graph(n));
    out.push_back(complete_bipartite_graph(n / 2 + 1, n));
  }
  return out;
}

}  // namespace

TEST(CharacteristicLength, Examples) {
  EXPECT_EQ(characteristic_length(complete_graph(7)), R(1));
  EXPECT_EQ(characteristic_length(cycle_graph(5)), R(3, 2));
  EXPECT_EQ(characteristic_length(cycle_graph(4)), R(4, 3));
  EXPECT_EQ(characteristic_length(path_graph(6)), R(7, 3));
  EXPECT_EQ(characteristic_length(complete_bipartite_graph(2, 3)), R(7, 5));
}

TEST(CharacteristicLength, ClosedForms) {
  for (long long n = 2; n <= 12; ++n) {
    const auto N = static_cast<std::size_t>(n);
    EXPECT_EQ(characteristic_length(complete_graph(N)), R(1));
    EXPECT_EQ(characteristic_length(path_graph(N)), R(n + 1, 3));
    if (n >= 3) {
      const Rational c = n % 2 ? R(n + 1, 4) : R(n * n, 4 * (n - 1));
      EXPECT_EQ(characteristic_length(cycle_graph(N)), c) << n;
    }
  }
}

TEST(CharacteristicLength, MatchesFloydWarshallOracle) {
  Rng rng(17);
  int checked = 0;
  while (checked < 60) {
    const auto g = erdos_renyi(2 + rng.below(14), 0.2 + 0.7 * rng.uniform(), rng.next());
    if (!is_connected(g)) continue;
    EXPECT_EQ(characteristic_length(g), oracle::mean_distance(g));
    ++checked;
  }
}

TEST(CharacteristicLength, InvariantUnderRelabeling) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto g = erdos_renyi(10, 0.4, rng.next());
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = 9; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    EXPECT_EQ(characteristic_length(g), characteristic_length(relabel(g, perm)));
  }
}

TEST(CharacteristicLength, DisconnectedIsComponentAverage) {
  // K_3 + P_3: (1 + 4/3) / 2.
  const auto g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(characteristic_length(g), R(7, 6));
}

TEST(LocalMeanDistance, Examples) {
  EXPECT_EQ(local_mean_distance(complete_graph(4), 2), R(1));
  EXPECT_EQ(local_mean_distance(path_graph(3), 1), R(1));
  EXPECT_EQ(local_mean_distance(path_graph(3), 0), R(3, 2));
}

TEST(RelativeLength, Examples) {
  EXPECT_EQ(relative_characteristic_length(complete_graph(4), std::vector<Vertex>{0, 1, 2}), R(1));
  EXPECT_EQ(relative_characteristic_length(cycle_graph(6), std::vector<Vertex>{0, 3}), R(3));
  std::vector<Vertex> leaves{1, 2, 3, 4};
  EXPECT_EQ(relative_characteristic_length(star_graph(4), leaves), R(2));
  EXPECT_THROW(relative_characteristic_length(cycle_graph(6), std::vector<Vertex>{0}), Error);
}

TEST(LocalLength, Examples) {
  EXPECT_EQ(local_length(complete_graph(6), 0).value, R(1));
  EXPECT_EQ(local_length(star_graph(5), 0).value, R(2));
  EXPECT_EQ(local_length(cycle_graph(5), 0).value, R(2));
  const auto leaf = local_length(star_graph(5), 1);
  EXPECT_TRUE(leaf.degenerate);
  EXPECT_EQ(leaf.value, R(2));
}

TEST(LocalLength, MatchesBallOracle) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(12, rng.uniform(), rng.next());
    for (Vertex x = 0; x < g.order(); ++x)
      if (g.degree(x) >= 2) EXPECT_EQ(local_length(g, x).value, oracle::local_length(g, x));
  }
}

TEST(LocalCluster, Examples) {
  EXPECT_EQ(local_cluster(complete_graph(5), 0), R(1));
  EXPECT_EQ(local_cluster(wheel_graph(7), 0), R(2, 3));
  EXPECT_EQ(local_cluster(wheel_graph(7), 7), R(1, 3));
}

TEST(LocalCluster, MatchesDefinition) {
  Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    const auto g = erdos_renyi(12, rng.uniform(), rng.next());
    for (Vertex x = 0; x < g.order(); ++x) EXPECT_EQ(local_cluster(g, x), oracle::cluster(g, x));
  }
}

TEST(ClusterLengthLemma, ExactOnRandomAndFamilies) {
  Rng rng(31);
  std::vector<Graph> graphs = deterministic_families();
  for (int t = 0; t < 100; ++t) graphs.push_back(erdos_renyi(2 + rng.below(20), rng.uniform(), rng.next()));
  for (const auto& g : graphs)
    for (Vertex x = 0; x < g.order(); ++x) {
      if (g.degree(x) < 2) continue;
      const auto l = local_length(g, x);
      EXPECT_FALSE(l.degenerate);
      EXPECT_EQ(l.value + local_cluster(g, x), R(2));
    }
}

TEST(MeanCluster, Examples) {
  EXPECT_EQ(mean_cluster(complete_graph(6)), R(1));
  for (std::size_t n = 5; n <= 9; ++n) EXPECT_EQ(mean_cluster(cycle_graph(n)), R(0));
  for (long long n = 5; n <= 10; ++n) {
    const Rational expected = (R(n) * R(2, 3) + R(2, n - 1)) / R(n + 1);
    EXPECT_EQ(mean_cluster(wheel_graph(static_cast<std::size_t>(n))), expected);
  }
}

TEST(MeanCluster, Bounded) {
  Rng rng(37);
  for (int t = 0; t < 30; ++t) {
    const auto nu = mean_cluster(erdos_renyi(15, rng.uniform(), rng.next()));
    EXPECT_GE(nu, R(0));
    EXPECT_LE(nu, R(1));
  }
}

TEST(ClusterLengthRatio, Flags) {
  EXPECT_EQ(cluster_length_ratio(complete_graph(5)).status, ClusterLengthRatio::Status::ClusterOne);
  EXPECT_EQ(cluster_length_ratio(cycle_graph(9)).status, ClusterLengthRatio::Status::ClusterZero);
}

TEST(ClusterLengthRatio, WheelComposesExactParts) {
  const auto g = wheel_graph(6);
  const double mu = to_double(characteristic_length(g));
  const double nu = to_double(mean_cluster(g));
  const auto r = cluster_length_ratio(g);
  ASSERT_TRUE(r.defined());
  EXPECT_NEAR(r.value, mu / std::log(1.0 / nu), 1e-12);
}

TEST(Wiener, Examples) {
  EXPECT_EQ(wiener_index(complete_graph(4)), R(12));
  EXPECT_EQ(wiener_index(path_graph(3)), R(8));
  EXPECT_EQ(wiener_index(cycle_graph(4)), R(16));
}

TEST(Wiener, EqualsPairCountTimesMu) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const auto g = erdos_renyi(12, 0.5, rng.next());
    if (!is_connected(g)) continue;
    EXPECT_EQ(wiener_index(g), R(12 * 11) * characteristic_length(g));
  }
}

TEST(DistanceVariance, Examples) {
  EXPECT_EQ(distance_variance(complete_graph(6)), 0u);
  EXPECT_EQ(distance_variance(path_graph(3)), 1u);
  EXPECT_EQ(distance_variance(star_graph(4)), 3u);
}

TEST(Centrality, Examples) {
  EXPECT_EQ(closeness_centrality(complete_graph(4), 0), R(1, 3));
  EXPECT_EQ(closeness_centrality(path_graph(3), 1), R(1, 2));
  EXPECT_EQ(closeness_centrality(path_graph(3), 0), R(1, 3));
}

TEST(Magnitude, Examples) {
  EXPECT_NEAR(magnitude(complete_graph(1)), 1.0, 1e-12);
  EXPECT_NEAR(magnitude(complete_graph(2)), 2.0 / (1.0 + std::exp(-1.0)), 1e-12);
  EXPECT_NEAR(magnitude(complete_graph(2)), 1.46212, 1e-5);
  for (int n = 3; n <= 6; ++n)
    EXPECT_NEAR(magnitude(complete_graph(n)), n / (1.0 + (n - 1) * std::exp(-1.0)), 1e-10);
}

TEST(Magnitude, DisjointUnionIsAdditive) {
  const auto two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_NEAR(magnitude(two), 2 * magnitude(complete_graph(2)), 1e-10);
}

TEST(LocalProfile, CompleteGraph) {
  for (const auto& r : local_profile(complete_graph(4))) {
    EXPECT_EQ(r.cluster, R(1));
    EXPECT_EQ(r.local_length, R(1));
    ASSERT_TRUE(r.mean_distance);
    EXPECT_EQ(*r.mean_distance, R(1));
  }
}

TEST(LocalProfile, StarCenterAndCycleSymmetry) {
  const auto star = local_profile(star_graph(4));
  EXPECT_EQ(star[0].cluster, R(0));
  EXPECT_EQ(star[0].local_length, R(2));
  const auto c5 = local_profile(cycle_graph(5));
  for (const auto& r : c5) {
    EXPECT_EQ(r.cluster, c5[0].cluster);
    EXPECT_EQ(r.local_length, c5[0].local_length);
    EXPECT_EQ(r.mean_distance, c5[0].mean_distance);
    EXPECT_EQ(r.dimension, c5[0].dimension);
    EXPECT_EQ(r.curvature, c5[0].curvature);
  }
}

TEST(LocalProfile, AbsentFieldsOnDisconnected) {
  const auto p = local_profile(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  for (const auto& r : p) {
    EXPECT_FALSE(r.mean_distance);
    EXPECT_FALSE(r.centrality);
  }
}

namespace {

bool is_path_graph(const Graph& g) {
  if (g.size() + 1 != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

// Exhaustive over connected graphs on <= 6 vertices.
TEST(CharacteristicLength, ExhaustiveBoundsAndEqualityCases) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const long long N = static_cast<long long>(n);
    oracle::for_each_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      const auto mu = characteristic_length(g);
      EXPECT_GE(mu, R(1));
      EXPECT_LE(mu, R(N + 1, 3));
      EXPECT_EQ(mu == R(1), g.size() == n * (n - 1) / 2);
      EXPECT_EQ(mu == R(N + 1, 3), is_path_graph(g));
      EXPECT_LE(mu, R(diameter(g)));
      EXPECT_LE(mu, R(static_cast<long long>(oracle::independence_number(g))));
      // Non-adjacent pairs sit at distance >= 2, so mu >= 2 - 2m/(n(n-1)),
      // with equality exactly when the diameter is at most 2.
      const Rational density_form = R(2) - R(2 * static_cast<long long>(g.size()), N * (N - 1));
      EXPECT_GE(mu, density_form);
      EXPECT_EQ(mu == density_form, diameter(g) <= 2);
    });
  }
}

TEST(RelativeLength, AtMostLengthOfConnectedInducedSubgraph) {
  Rng rng(53);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 100; ++t) {
    const auto g = erdos_renyi(10, 0.35, rng.next());
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 10; ++v)
      if (rng.uniform() < 0.6) subset.push_back(v);
    if (subset.size() < 2 || !is_connected(g)) continue;
    const auto h = induced_subgraph(g, subset).graph;
    if (!is_connected(h)) continue;
    ++checked;
    EXPECT_LE(relative_characteristic_length(g, subset), characteristic_length(h));
  }
  EXPECT_GT(checked, 20);
}

TEST(Magnitude, CompleteGraphClosedFormUpToEight) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_NEAR(magnitude(complete_graph(n)), n / (1.0 + (n - 1) * std::exp(-1.0)), 1e-10);
}
