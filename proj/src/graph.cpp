#include "netfunc/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "netfunc/error.hpp"

namespace netfunc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::CliqueBudgetExceeded: return "CliqueBudgetExceeded";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SingularZ: return "SingularZ";
    case ErrorCode::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFunctional: return "UnknownFunctional";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::LoopEdge, "loop edge at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice_edges = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_edges += nbrs.size();
  }
  g.edge_count_ = twice_edges / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<DistanceMatrix::value_type> bfs_distances(const Graph& g, Vertex source) {
  std::vector<DistanceMatrix::value_type> dist(g.order(), DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n);
  for (Vertex x = 0; x < n; ++x) {
    const auto row = bfs_distances(g, x);
    for (Vertex y = 0; y < n; ++y) d.at(x, y) = row[y];
  }
  return d;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> ids(vertices.begin(), vertices.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<Edge> edges;
  for (Vertex i = 0; i < ids.size(); ++i) {
    for (Vertex w : g.neighbors(ids[i])) {
      if (w <= ids[i]) continue;
      const auto it = std::lower_bound(ids.begin(), ids.end(), w);
      if (it != ids.end() && *it == w) {
        edges.emplace_back(i, static_cast<Vertex>(it - ids.begin()));
      }
    }
  }
  Subgraph sub{Graph::from_edge_list(ids.size(), edges), std::move(ids)};
  return sub;
}

Subgraph sphere(const Graph& g, Vertex x) { return induced_subgraph(g, g.neighbors(x)); }

Subgraph ball(const Graph& g, Vertex x) {
  std::vector<Vertex> closed(g.neighbors(x).begin(), g.neighbors(x).end());
  closed.push_back(x);
  return induced_subgraph(g, closed);
}

namespace {

// Extends the clique by candidates with larger id only, so every clique is
// reached exactly once from its smallest vertex.
void extend_cliques(const Graph& g, const std::vector<Vertex>& candidates, std::size_t depth,
                    std::vector<std::uint64_t>& counts, std::uint64_t& total,
                    std::uint64_t budget) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
    if (++total > budget) {
      throw Error(ErrorCode::CliqueBudgetExceeded,
                  "clique enumeration exceeded budget of " + std::to_string(budget));
    }
    std::vector<Vertex> next;
    const auto nbrs = g.neighbors(v);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          candidates.end(), nbrs.begin(), nbrs.end(),
                          std::back_inserter(next));
    if (!next.empty()) extend_cliques(g, next, depth + 1, counts, total, budget);
  }
}

}  // namespace

SimplexCounts simplex_counts(const Graph& g, std::uint64_t budget) {
  SimplexCounts result;
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  std::uint64_t total = 0;
  extend_cliques(g, all, 0, result.counts, total, budget);
  return result;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (auto d : bfs_distances(g, x)) {
      if (d == DistanceMatrix::kUnreachable) {
        throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace netfunc
