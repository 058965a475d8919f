#include "netfunc/combinatorial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>

#include "netfunc/error.hpp"

namespace netfunc {

namespace {

using Bits = std::uint64_t;

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap || g.order() > 64) {
    throw Error(ErrorCode::SizeCapExceeded, std::string(what) + ": n=" +
                                                std::to_string(g.order()) + " exceeds cap " +
                                                std::to_string(std::min<std::size_t>(cap, 64)));
  }
}

std::vector<Bits> adjacency_bits(const Graph& g, bool complement) {
  const std::size_t n = g.order();
  const Bits all = n == 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
  std::vector<Bits> adj(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) adj[u] |= Bits{1} << v;
    if (complement) adj[u] = ~adj[u] & all & ~(Bits{1} << u);
  }
  return adj;
}

// Maximum clique with greedy-coloring bounds.
class MaxClique {
 public:
  explicit MaxClique(std::vector<Bits> adj) : adj_(std::move(adj)) {}

  std::vector<Vertex> run() {
    const std::size_t n = adj_.size();
    const Bits all = n == 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
    std::vector<Vertex> current;
    if (n > 0) expand(current, all);
    return best_;
  }

 private:
  // Greedy sequential coloring of `candidates`; order/bound list vertices
  // by nondecreasing color, bound[i] = number of colors used up to order[i].
  void color(Bits candidates, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    std::size_t colors = 0;
    while (candidates) {
      ++colors;
      Bits available = candidates;
      while (available) {
        const auto v = static_cast<Vertex>(std::countr_zero(available));
        available &= ~(Bits{1} << v);
        available &= ~adj_[v];
        candidates &= ~(Bits{1} << v);
        order.push_back(v);
        bound.push_back(colors);
      }
    }
  }

  void expand(std::vector<Vertex>& current, Bits candidates) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      const Bits next = candidates & adj_[v];
      if (next) {
        expand(current, next);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      candidates &= ~(Bits{1} << v);
    }
  }

  std::vector<Bits> adj_;
  std::vector<Vertex> best_;
};

bool colorable(const std::vector<Bits>& adj, const std::vector<Vertex>& order, std::size_t k,
               std::vector<int>& colors, std::size_t index, int used) {
  if (index == order.size()) return true;
  const Vertex v = order[index];
  // New colors are opened in order, so color classes are never permuted.
  const int limit = std::min<int>(static_cast<int>(k), used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    Bits nbrs = adj[v];
    while (nbrs) {
      const auto w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (colors[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colors[v] = c;
    if (colorable(adj, order, k, colors, index + 1, std::max(used, c + 1))) return true;
    colors[v] = -1;
  }
  return false;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  std::vector<Vertex> parent_;
};

// Edges split into forests by matroid partitioning: a new edge enters a
// forest directly or through a shortest chain of swaps. When no chain exists
// the current edges plus the new one need another forest.
class ForestPartition {
 public:
  explicit ForestPartition(const Graph& g) : n_(g.order()), edges_(g.edges()), forest_of_(edges_.size(), kNone) {}

  std::size_t run() {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (!insert(e)) {
        forest_of_[e] = forests_++;
      }
    }
    return forests_;
  }

  std::vector<std::vector<Edge>> witness() const {
    std::vector<std::vector<Edge>> out(forests_);
    for (std::size_t i = 0; i < edges_.size(); ++i) out[forest_of_[i]].push_back(edges_[i]);
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Edge ids on the path between a and b in forest f, or nullopt if a and b
  // lie in different trees.
  std::optional<std::vector<std::size_t>> tree_path(std::size_t f, Vertex a, Vertex b) const {
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (forest_of_[i] == f) {
        adj[edges_[i].first].emplace_back(edges_[i].second, i);
        adj[edges_[i].second].emplace_back(edges_[i].first, i);
      }
    std::vector<std::size_t> via(n_, kNone);
    std::vector<bool> seen(n_, false);
    std::deque<Vertex> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (x == b) break;
      for (auto [y, id] : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          via[y] = id;
          queue.push_back(y);
        }
    }
    if (!seen[b]) return std::nullopt;
    std::vector<std::size_t> path;
    for (Vertex x = b; x != a;) {
      const std::size_t id = via[x];
      path.push_back(id);
      x = edges_[id].first == x ? edges_[id].second : edges_[id].first;
    }
    return path;
  }

  bool insert(std::size_t e) {
    // label[y] = (x, f): x enters forest f and pushes y out of it.
    std::vector<std::pair<std::size_t, std::size_t>> label(edges_.size(), {kNone, kNone});
    std::vector<bool> visited(edges_.size(), false);
    std::deque<std::size_t> queue{e};
    visited[e] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t f = 0; f < forests_; ++f) {
        if (forest_of_[x] == f) continue;
        const auto path = tree_path(f, edges_[x].first, edges_[x].second);
        if (!path) {
          std::size_t cur = x, target = f;
          while (true) {
            const std::size_t previous = forest_of_[cur];
            forest_of_[cur] = target;
            if (cur == e) return true;
            target = previous;
            cur = label[cur].first;
          }
        }
        for (std::size_t y : *path)
          if (!visited[y]) {
            visited[y] = true;
            label[y] = {x, f};
            queue.push_back(y);
          }
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> forest_of_;
  std::size_t forests_ = 0;
};

}  // namespace

IndependentSet maximum_independent_set(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "independence number");
  auto vertices = MaxClique(adjacency_bits(g, true)).run();
  std::sort(vertices.begin(), vertices.end());
  return {vertices.size(), std::move(vertices)};
}

std::size_t independence_number(const Graph& g, std::size_t cap) {
  return maximum_independent_set(g, cap).size;
}

std::size_t clique_number(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "clique number");
  return MaxClique(adjacency_bits(g, false)).run().size();
}

std::size_t chromatic_number(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "chromatic number");
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const auto adj = adjacency_bits(g, false);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  const std::size_t lower = MaxClique(adj).run().size();
  for (std::size_t k = std::max<std::size_t>(lower, 1);; ++k) {
    std::vector<int> colors(n, -1);
    if (colorable(adj, order, k, colors, 0, 0)) return k;
  }
}

std::size_t nash_williams_lower_bound(const Graph& g) {
  if (g.order() < 2) return 0;
  const std::size_t denom = g.order() - 1;
  return (g.size() + denom - 1) / denom;
}

ArboricityResult arboricity(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "arboricity");
  ForestPartition partition(g);
  const std::size_t k = partition.run();
  return {k, partition.witness()};
}

bool is_forest_partition(const Graph& g, const std::vector<std::vector<Edge>>& forests) {
  std::vector<Edge> seen;
  for (const auto& forest : forests) {
    UnionFind uf(g.order());
    for (auto [u, v] : forest) {
      if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
      if (!uf.unite(u, v)) return false;
      seen.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen == g.edges();
}

Rational scale_measure(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::NoEdges, "scale measure requires at least one edge");
  BigInt total = 0;
  std::uint64_t largest = 0;
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t w = static_cast<std::uint64_t>(g.degree(u)) * g.degree(v);
    total += w;
    largest = std::max(largest, w);
  }
  return Rational(total, BigInt(largest));
}

}  // namespace netfunc
