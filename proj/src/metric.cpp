#include "netfunc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netfunc/error.hpp"
#include "netfunc/linalg.hpp"
#include "netfunc/topology.hpp"

namespace netfunc {

namespace {

[[noreturn]] void disconnected(const char* what) {
  throw Error(ErrorCode::Disconnected, std::string(what) + " requires a connected graph");
}

// Sum of d(x, y) over y, or nullopt if some y is unreachable.
std::optional<std::uint64_t> total_distance(std::span<const DistanceMatrix::value_type> row) {
  std::uint64_t total = 0;
  for (auto dist : row) {
    if (dist == DistanceMatrix::kUnreachable) return std::nullopt;
    total += dist;
  }
  return total;
}

std::uint64_t require_total(std::span<const DistanceMatrix::value_type> row, const char* what) {
  const auto total = total_distance(row);
  if (!total) disconnected(what);
  return *total;
}

}  // namespace

Rational characteristic_length(const Graph& g) {
  return characteristic_length(g, all_pairs_distances(g));
}

Rational characteristic_length(const Graph& g, const DistanceMatrix& d) {
  const auto components = connected_components(g);
  if (components.empty()) return Rational(0);
  Rational sum(0);
  for (const auto& comp : components) {
    const std::size_t k = comp.size();
    if (k < 2) continue;
    std::uint64_t total = 0;
    for (Vertex x : comp)
      for (Vertex y : comp) total += d(x, y);
    sum += Rational(BigInt(total), BigInt(k) * BigInt(k - 1));
  }
  return sum / BigInt(components.size());
}

Rational local_mean_distance(const Graph& g, Vertex x) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "local mean distance requires n >= 2");
  const auto row = bfs_distances(g, x);
  return Rational(BigInt(require_total(row, "local mean distance")), BigInt(g.order() - 1));
}

Rational local_mean_distance(const DistanceMatrix& d, Vertex x) {
  const std::size_t n = d.order();
  if (n < 2) throw Error(ErrorCode::TooSmall, "local mean distance requires n >= 2");
  return Rational(BigInt(require_total(d.row(x), "local mean distance")), BigInt(n - 1));
}

Rational relative_characteristic_length(const Graph& g, std::span<const Vertex> subset) {
  return relative_characteristic_length(all_pairs_distances(g), subset);
}

Rational relative_characteristic_length(const DistanceMatrix& d, std::span<const Vertex> subset) {
  std::vector<Vertex> h(subset.begin(), subset.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (h.size() < 2) throw Error(ErrorCode::TooSmall, "relative length requires |H| >= 2");
  std::uint64_t total = 0;
  for (Vertex x : h) {
    for (Vertex y : h) {
      if (!d.reachable(x, y)) disconnected("relative characteristic length");
      total += d(x, y);
    }
  }
  return Rational(BigInt(total), BigInt(h.size()) * BigInt(h.size() - 1));
}

LocalLength local_length(const Graph& g, Vertex x) {
  if (g.degree(x) < 2) return {Rational(2), true};
  const Subgraph b = ball(g, x);
  // Sphere vertices are every ball vertex except the image of x.
  std::vector<Vertex> sphere_ids;
  for (Vertex i = 0; i < b.to_parent.size(); ++i) {
    if (b.to_parent[i] != x) sphere_ids.push_back(i);
  }
  return {relative_characteristic_length(all_pairs_distances(b.graph), sphere_ids), false};
}

Rational local_cluster(const Graph& g, Vertex x) {
  const std::size_t k = g.degree(x);
  if (k < 2) return Rational(0);
  const Subgraph s = sphere(g, x);
  return Rational(BigInt(2 * s.graph.size()), BigInt(k) * BigInt(k - 1));
}

Rational mean_cluster(const Graph& g) {
  if (g.order() == 0) return Rational(0);
  Rational sum(0);
  for (Vertex x = 0; x < g.order(); ++x) sum += local_cluster(g, x);
  return sum / BigInt(g.order());
}

ClusterLengthRatio cluster_length_ratio(const Rational& mu, const Rational& nu) {
  if (nu == 0) return {ClusterLengthRatio::Status::ClusterZero, 0.0};
  if (nu == 1) return {ClusterLengthRatio::Status::ClusterOne, 0.0};
  return {ClusterLengthRatio::Status::Defined, to_double(mu) / std::log(1.0 / to_double(nu))};
}

ClusterLengthRatio cluster_length_ratio(const Graph& g) {
  return cluster_length_ratio(characteristic_length(g), mean_cluster(g));
}

Rational wiener_index(const Graph& g) { return wiener_index(all_pairs_distances(g)); }

Rational wiener_index(const DistanceMatrix& d) {
  BigInt total = 0;
  for (Vertex x = 0; x < d.order(); ++x) total += require_total(d.row(x), "Wiener index");
  return Rational(total);
}

std::uint64_t distance_variance(const Graph& g) {
  return distance_variance(all_pairs_distances(g));
}

std::uint64_t distance_variance(const DistanceMatrix& d) {
  if (d.order() == 0) return 0;
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t hi = 0;
  for (Vertex x = 0; x < d.order(); ++x) {
    const auto t = require_total(d.row(x), "distance variance");
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

Rational closeness_centrality(const Graph& g, Vertex x) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "centrality requires n >= 2");
  const auto row = bfs_distances(g, x);
  return Rational(BigInt(1), BigInt(require_total(row, "closeness centrality")));
}

Rational closeness_centrality(const DistanceMatrix& d, Vertex x) {
  if (d.order() < 2) throw Error(ErrorCode::TooSmall, "centrality requires n >= 2");
  return Rational(BigInt(1), BigInt(require_total(d.row(x), "closeness centrality")));
}

Rational mean_centrality(const Graph& g) { return mean_centrality(all_pairs_distances(g)); }

Rational mean_centrality(const DistanceMatrix& d) {
  if (d.order() < 2) throw Error(ErrorCode::TooSmall, "centrality requires n >= 2");
  Rational sum(0);
  for (Vertex x = 0; x < d.order(); ++x) sum += closeness_centrality(d, x);
  return sum / BigInt(d.order());
}

double magnitude(const Graph& g) { return magnitude(all_pairs_distances(g)); }

double magnitude(const DistanceMatrix& d) {
  const std::size_t n = d.order();
  // Unreachable pairs have similarity exp(-inf) = 0.
  DenseMatrix z(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      z(i, j) = d.reachable(i, j) ? std::exp(-static_cast<double>(d(i, j))) : 0.0;
  const auto w = solve_partial_pivot(z, std::vector<double>(n, 1.0), 1e-12);
  double total = 0.0;
  for (double wi : w) total += wi;
  return total;
}

LocalProfile local_profile(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const bool connected = is_connected(g);
  const auto curvature = curvature_summary(g, d);
  DimensionEvaluator dims(g);
  LocalProfile profile;
  profile.reserve(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    VertexRecord rec;
    rec.vertex = x;
    rec.degree = g.degree(x);
    rec.cluster = local_cluster(g, x);
    const auto len = local_length(g, x);
    rec.local_length = len.value;
    rec.length_degenerate = len.degenerate;
    if (connected && g.order() >= 2) {
      rec.mean_distance = local_mean_distance(d, x);
      rec.centrality = closeness_centrality(d, x);
    }
    rec.curvature = curvature.curvature[x];
    rec.dimension = dims.vertex_dimension(x);
    profile.push_back(std::move(rec));
  }
  return profile;
}

}  // namespace netfunc
