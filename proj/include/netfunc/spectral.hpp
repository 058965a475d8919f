#pragma once

#include <optional>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/linalg.hpp"
#include "netfunc/numeric.hpp"

namespace netfunc {

/// Eigenvalues of L = D - A, ascending. The first `component_count`
/// entries are the (theoretically) zero eigenvalues.
struct LaplacianSpectrum {
  std::vector<double> eigenvalues;
  std::size_t component_count = 0;
};

DenseMatrix laplacian_matrix(const Graph& g);
LaplacianSpectrum laplacian_spectrum(const Graph& g, const JacobiOptions& options = {});

/// Product of the nonzero Laplacian eigenvalues, carried in log form.
/// `value` is present when exp(log_value) is a finite double.
struct SpectralComplexity {
  double log_value = 0.0;
  std::optional<double> value;
};

SpectralComplexity spectral_complexity(const Graph& g);
SpectralComplexity spectral_complexity(const LaplacianSpectrum& spectrum);

/// theta = det(L + I), the number of rooted spanning forests.
BigInt forest_complexity(const Graph& g);

/// Kirchhoff: det of L with row/column 0 removed. Throws Disconnected.
BigInt spanning_tree_count(const Graph& g);

/// 2 tr(L^+) / (n - 1). Throws Disconnected; requires n >= 2.
double pseudoinverse_trace_bound(const Graph& g);
double pseudoinverse_trace_bound(const LaplacianSpectrum& spectrum);

}  // namespace netfunc
