// Independent reference implementations used only by the tests. Everything
// here is deliberately naive: adjacency matrices, Floyd-Warshall, and
// exhaustive subset enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/numeric.hpp"

namespace oracle {

using netfunc::Graph;
using netfunc::Rational;
using netfunc::BigInt;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix adjacency(const Graph& g) {
  const auto n = g.order();
  AdjMatrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline std::vector<std::vector<int>> floyd_warshall(const AdjMatrix& a) {
  const auto n = a.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) { return floyd_warshall(adjacency(g)); }

/// Mean distance over ordered pairs of a connected graph, n >= 2.
inline Rational mean_distance(const Graph& g) {
  const auto d = floyd_warshall(g);
  const auto n = g.order();
  long long total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) total += d[i][j];
  return Rational(total) / Rational(static_cast<long long>(n * (n - 1)));
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = floyd_warshall(g);
  for (int x : d[0])
    if (x >= kInf) return false;
  return true;
}

/// Counts of k-cliques (index k-1) by checking every vertex subset.
inline std::vector<std::uint64_t> clique_counts(const Graph& g) {
  const auto n = g.order();
  const auto a = adjacency(g);
  std::vector<std::uint64_t> counts;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) vs.push_back(i);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j) clique = a[vs[i]][vs[j]];
    if (!clique) continue;
    if (counts.size() < vs.size()) counts.resize(vs.size(), 0);
    ++counts[vs.size() - 1];
  }
  return counts;
}

/// Local clustering straight from the definition.
inline Rational cluster(const Graph& g, std::size_t x) {
  const auto a = adjacency(g);
  std::vector<std::size_t> nb;
  for (std::size_t y = 0; y < g.order(); ++y)
    if (a[x][y]) nb.push_back(y);
  if (nb.size() < 2) return Rational(0);
  long long edges = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) edges += a[nb[i]][nb[j]];
  const long long k = static_cast<long long>(nb.size());
  return Rational(2 * edges) / Rational(k * (k - 1));
}

/// Mean distance between distinct neighbours of x, measured in the closed
/// neighbourhood of x (Floyd-Warshall on the ball).
inline Rational local_length(const Graph& g, std::size_t x) {
  const auto a = adjacency(g);
  std::vector<std::size_t> ball{x};
  for (std::size_t y = 0; y < g.order(); ++y)
    if (a[x][y]) ball.push_back(y);
  AdjMatrix b(ball.size(), std::vector<bool>(ball.size()));
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) b[i][j] = a[ball[i]][ball[j]];
  const auto d = floyd_warshall(b);
  long long total = 0, pairs = 0;
  for (std::size_t i = 1; i < ball.size(); ++i)
    for (std::size_t j = 1; j < ball.size(); ++j)
      if (i != j) {
        total += d[i][j];
        ++pairs;
      }
  return Rational(total) / Rational(pairs);
}

/// Inductive dimension by plain recursion on vertex subsets (no memo).
inline Rational dimension(const AdjMatrix& a, const std::vector<std::size_t>& vs) {
  if (vs.empty()) return Rational(-1);
  Rational sum(0);
  for (std::size_t x : vs) {
    std::vector<std::size_t> sphere;
    for (std::size_t y : vs)
      if (a[x][y]) sphere.push_back(y);
    sum += Rational(1) + dimension(a, sphere);
  }
  return sum / Rational(static_cast<long long>(vs.size()));
}

inline Rational dimension(const Graph& g) {
  std::vector<std::size_t> vs(g.order());
  std::iota(vs.begin(), vs.end(), std::size_t{0});
  return dimension(adjacency(g), vs);
}

inline bool acyclic(std::size_t n, const std::vector<netfunc::Edge>& edges, std::vector<std::size_t>* sizes = nullptr) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [u, v] : edges) {
    const auto ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  if (sizes) {
    sizes->assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) ++(*sizes)[find(x)];
  }
  return true;
}

/// Rooted spanning forests: every acyclic edge subset, times the product of
/// its tree sizes (choice of root in each tree).
inline BigInt rooted_forests(const Graph& g) {
  const auto edges = g.edges();
  BigInt total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    std::vector<netfunc::Edge> chosen;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (s >> i & 1) chosen.push_back(edges[i]);
    std::vector<std::size_t> sizes;
    if (!acyclic(g.order(), chosen, &sizes)) continue;
    BigInt product = 1;
    for (auto sz : sizes)
      if (sz) product *= sz;
    total += product;
  }
  return total;
}

/// Spanning trees as acyclic (n-1)-edge subsets.
inline std::uint64_t spanning_trees(const Graph& g) {
  const auto n = g.order();
  if (n <= 1) return 1;
  const auto edges = g.edges();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != n - 1) continue;
    std::vector<netfunc::Edge> chosen;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (s >> i & 1) chosen.push_back(edges[i]);
    count += acyclic(n, chosen);
  }
  return count;
}

inline std::size_t independence_number(const Graph& g) {
  const auto n = g.order();
  const auto a = adjacency(g);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((s >> i & 1) && (s >> j & 1) && a[i][j]) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(s));
  }
  return best;
}

/// Smallest k admitting a proper colouring, trying all k^n assignments.
inline std::size_t chromatic_number(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> colour(n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges)
        if (colour[u] == colour[v]) proper = false;
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Smallest k such that some assignment of edges to k classes makes every
/// class acyclic (k^m assignments; keep m small).
inline std::size_t arboricity(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> cls(edges.size(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t c = 0; c < k && ok; ++c) {
        std::vector<netfunc::Edge> part;
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (cls[i] == c) part.push_back(edges[i]);
        ok = acyclic(g.order(), part);
      }
      if (ok) return k;
      std::size_t i = 0;
      while (i < edges.size() && ++cls[i] == k) cls[i++] = 0;
      if (i == edges.size()) break;
    }
  }
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Connected labelled graphs on n vertices via
/// c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2).
inline BigInt connected_labeled_graphs(unsigned n) {
  std::vector<BigInt> c(n + 1);
  auto all = [](unsigned k) { return BigInt(1) << (k * (k - 1) / 2); };
  for (unsigned m = 1; m <= n; ++m) {
    c[m] = all(m);
    for (unsigned k = 1; k < m; ++k) c[m] -= binomial(m - 1, k - 1) * c[k] * all(m - k);
  }
  return c[n];
}

/// Every labelled graph on n vertices (n <= 6 keeps this cheap).
inline void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<netfunc::Edge> pairs;
  for (netfunc::Vertex u = 0; u < n; ++u)
    for (netfunc::Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<netfunc::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (s >> i & 1) edges.push_back(pairs[i]);
    fn(Graph::from_edge_list(n, edges));
  }
}

/// All labelled trees on n vertices via Pruefer sequences.
inline std::vector<Graph> all_trees(std::size_t n) {
  std::vector<Graph> trees;
  if (n == 1) return {Graph::from_edge_list(1, {})};
  if (n == 2) return {Graph::from_edge_list(2, {{0, 1}})};
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (auto s : seq) ++degree[s];
    std::vector<netfunc::Edge> edges;
    for (auto s : seq) {
      for (std::size_t leaf = 0; leaf < n; ++leaf)
        if (degree[leaf] == 1) {
          edges.emplace_back(static_cast<netfunc::Vertex>(leaf), static_cast<netfunc::Vertex>(s));
          --degree[leaf];
          --degree[s];
          break;
        }
    }
    std::vector<netfunc::Vertex> last;
    for (std::size_t x = 0; x < n; ++x)
      if (degree[x] == 1) last.push_back(static_cast<netfunc::Vertex>(x));
    edges.emplace_back(last[0], last[1]);
    trees.push_back(Graph::from_edge_list(n, edges));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return trees;
}

}  // namespace oracle
