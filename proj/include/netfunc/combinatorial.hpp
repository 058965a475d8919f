#pragma once

#include <cstddef>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/numeric.hpp"

namespace netfunc {

inline constexpr std::size_t kIndependenceCap = 30;
inline constexpr std::size_t kChromaticCap = 20;
inline constexpr std::size_t kArboricityCap = 12;

/// Vertex caps for the exponential searches; exceeding one throws
/// Error(SizeCapExceeded). Hard limit is 64 vertices (bitset width).
struct ExactCaps {
  std::size_t independence = kIndependenceCap;
  std::size_t chromatic = kChromaticCap;
  std::size_t arboricity = kArboricityCap;
};

struct IndependentSet {
  std::size_t size = 0;
  std::vector<Vertex> vertices;
};

/// beta(G) by branch and bound on cliques of the complement.
IndependentSet maximum_independent_set(const Graph& g, std::size_t cap = kIndependenceCap);
std::size_t independence_number(const Graph& g, std::size_t cap = kIndependenceCap);

/// omega(G), same search on g itself.
std::size_t clique_number(const Graph& g, std::size_t cap = kIndependenceCap);

std::size_t chromatic_number(const Graph& g, std::size_t cap = kChromaticCap);

/// Minimum number of forests covering E, with an explicit partition.
struct ArboricityResult {
  std::size_t arboricity = 0;
  std::vector<std::vector<Edge>> forests;
};

ArboricityResult arboricity(const Graph& g, std::size_t cap = kArboricityCap);

/// True if `forests` partitions the edges of g and each part is acyclic.
bool is_forest_partition(const Graph& g, const std::vector<std::vector<Edge>>& forests);

/// ceil(m / (n - 1)) for the whole graph; 0 when n < 2.
std::size_t nash_williams_lower_bound(const Graph& g);

/// sigma = sum_e deg(a)deg(b) / max_e deg(a)deg(b). Throws NoEdges.
Rational scale_measure(const Graph& g);

}  // namespace netfunc
