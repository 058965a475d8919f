#include "netfunc/spectral.hpp"

#include <cmath>
#include <limits>

#include "netfunc/error.hpp"

namespace netfunc {

namespace {

IntegerMatrix integer_laplacian(const Graph& g, long long diagonal_shift) {
  const std::size_t n = g.order();
  IntegerMatrix l(n, n, BigInt(0));
  for (Vertex u = 0; u < n; ++u) {
    l(u, u) = static_cast<long long>(g.degree(u)) + diagonal_shift;
    for (Vertex v : g.neighbors(u)) l(u, v) = -1;
  }
  return l;
}

}  // namespace

DenseMatrix laplacian_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DenseMatrix l(n, n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    l(u, u) = static_cast<double>(g.degree(u));
    for (Vertex v : g.neighbors(u)) l(u, v) = -1.0;
  }
  return l;
}

LaplacianSpectrum laplacian_spectrum(const Graph& g, const JacobiOptions& options) {
  LaplacianSpectrum s;
  s.eigenvalues = jacobi_eigenvalues(laplacian_matrix(g), options);
  s.component_count = connected_components(g).size();
  return s;
}

SpectralComplexity spectral_complexity(const LaplacianSpectrum& spectrum) {
  // Rank is n - #components; the smallest component_count eigenvalues are
  // the kernel regardless of their rounded values.
  SpectralComplexity out;
  for (std::size_t i = spectrum.component_count; i < spectrum.eigenvalues.size(); ++i) {
    out.log_value += std::log(spectrum.eigenvalues[i]);
  }
  const double v = std::exp(out.log_value);
  if (std::isfinite(v)) out.value = v;
  return out;
}

SpectralComplexity spectral_complexity(const Graph& g) {
  return spectral_complexity(laplacian_spectrum(g));
}

BigInt forest_complexity(const Graph& g) { return bareiss_determinant(integer_laplacian(g, 1)); }

BigInt spanning_tree_count(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "spanning trees need a connected graph");
  const std::size_t n = g.order();
  if (n <= 1) return BigInt(1);
  const IntegerMatrix l = integer_laplacian(g, 0);
  IntegerMatrix minor(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = l(i, j);
  return bareiss_determinant(std::move(minor));
}

double pseudoinverse_trace_bound(const LaplacianSpectrum& spectrum) {
  const std::size_t n = spectrum.eigenvalues.size();
  if (n < 2) throw Error(ErrorCode::TooSmall, "trace bound requires n >= 2");
  if (spectrum.component_count != 1) {
    throw Error(ErrorCode::Disconnected, "trace bound requires a connected graph");
  }
  double trace = 0.0;
  for (std::size_t i = 1; i < n; ++i) trace += 1.0 / spectrum.eigenvalues[i];
  return 2.0 * trace / static_cast<double>(n - 1);
}

double pseudoinverse_trace_bound(const Graph& g) {
  return pseudoinverse_trace_bound(laplacian_spectrum(g));
}

}  // namespace netfunc
