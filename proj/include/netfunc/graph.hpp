#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace netfunc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Adjacency is stored as sorted neighbor lists; there are no loops and no
/// multi-edges, and u ~ v iff v ~ u.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph, merging duplicate and reversed pairs.
  /// Throws Error(LoopEdge) for u == v and Error(VertexOutOfRange) for ids >= n.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph together with the map from its vertex ids to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  using value_type = std::uint32_t;
  static constexpr value_type kUnreachable = std::numeric_limits<value_type>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  value_type operator()(Vertex x, Vertex y) const { return data_[x * n_ + y]; }
  value_type& at(Vertex x, Vertex y) { return data_[x * n_ + y]; }
  bool reachable(Vertex x, Vertex y) const { return (*this)(x, y) != kUnreachable; }
  std::span<const value_type> row(Vertex x) const {
    return std::span<const value_type>(data_).subspan(x * n_, n_);
  }

 private:
  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

/// counts[k] = number of complete subgraphs on k+1 vertices.
struct SimplexCounts {
  std::vector<std::uint64_t> counts;
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

/// Hop distances from a single source (kUnreachable elsewhere).
std::vector<DistanceMatrix::value_type> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g);

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph sphere(const Graph& g, Vertex x);
Subgraph ball(const Graph& g, Vertex x);

/// Clique counts by size; throws Error(CliqueBudgetExceeded) past `budget` cliques.
SimplexCounts simplex_counts(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Largest finite distance; throws Error(Disconnected) when not connected.
std::uint32_t diameter(const Graph& g);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace netfunc
