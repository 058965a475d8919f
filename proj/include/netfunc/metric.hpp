#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/numeric.hpp"

namespace netfunc {

/// Mean hop distance over ordered pairs of distinct vertices.
///
/// Disconnected graphs are averaged per component, unweighted; a component
/// with a single vertex contributes 0.
Rational characteristic_length(const Graph& g);
Rational characteristic_length(const Graph& g, const DistanceMatrix& d);

/// D(x): mean distance from x to the other vertices. Requires a connected graph, n >= 2.
Rational local_mean_distance(const Graph& g, Vertex x);
Rational local_mean_distance(const DistanceMatrix& d, Vertex x);

/// mu(H, G): mean over ordered pairs of H of the distance measured in g.
/// Throws TooSmall for |H| < 2 and Disconnected if some pair is unreachable.
Rational relative_characteristic_length(const Graph& g, std::span<const Vertex> subset);
Rational relative_characteristic_length(const DistanceMatrix& d, std::span<const Vertex> subset);

/// L(x) with its convention flag: vertices of degree <= 1 get value 2, degenerate = true.
struct LocalLength {
  Rational value;
  bool degenerate = false;
};

/// Mean distance between distinct neighbors of x, measured inside the ball B(x).
LocalLength local_length(const Graph& g, Vertex x);

/// Edge occupancy of the sphere S(x); 0 when degree <= 1.
Rational local_cluster(const Graph& g, Vertex x);

Rational mean_cluster(const Graph& g);

/// lambda = mu / log(1/nu), reported with the reason it is undefined.
struct ClusterLengthRatio {
  enum class Status { Defined, ClusterZero, ClusterOne };
  Status status = Status::Defined;
  double value = 0.0;

  bool defined() const { return status == Status::Defined; }
};

ClusterLengthRatio cluster_length_ratio(const Rational& mu, const Rational& nu);
ClusterLengthRatio cluster_length_ratio(const Graph& g);

/// Sum of d(x,y) over ordered pairs; requires a connected graph.
Rational wiener_index(const Graph& g);
Rational wiener_index(const DistanceMatrix& d);

/// max_x d(x) - min_x d(x) with d(x) the total distance from x.
std::uint64_t distance_variance(const Graph& g);
std::uint64_t distance_variance(const DistanceMatrix& d);

/// 1 / (sum of distances from x); requires connected, n >= 2.
Rational closeness_centrality(const Graph& g, Vertex x);
Rational closeness_centrality(const DistanceMatrix& d, Vertex x);
Rational mean_centrality(const Graph& g);
Rational mean_centrality(const DistanceMatrix& d);

/// Sum of the entries of Z^{-1}, Z_ij = exp(-d(i,j)). Throws SingularZ.
double magnitude(const Graph& g);
double magnitude(const DistanceMatrix& d);

struct VertexRecord {
  Vertex vertex = 0;
  std::size_t degree = 0;
  Rational cluster;
  Rational local_length;
  bool length_degenerate = false;
  std::optional<Rational> mean_distance;   // absent on disconnected graphs
  std::optional<Rational> centrality;      // absent on disconnected graphs
  std::optional<double> curvature;         // absent when delta or delta_2 is 0
  Rational dimension;
};

using LocalProfile = std::vector<VertexRecord>;

LocalProfile local_profile(const Graph& g);

}  // namespace netfunc
