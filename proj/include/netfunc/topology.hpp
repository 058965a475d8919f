#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/numeric.hpp"

namespace netfunc {

/// chi = v0 - v1 + v2 - ...; propagates CliqueBudgetExceeded.
std::int64_t euler_characteristic(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);
std::int64_t euler_characteristic(const SimplexCounts& counts);

inline constexpr std::uint64_t kDefaultDimensionBudget = 10'000'000;

/// Inductive dimension on vertex subsets of one ambient graph.
///
/// dim(empty) = -1 and dim(S) = 1 + mean over v in S of dim(S ∩ N(v)).
/// Results are memoized on the vertex set, so the evaluator is cheap to
/// query repeatedly but is not thread-safe; use one per worker.
class DimensionEvaluator {
 public:
  explicit DimensionEvaluator(const Graph& g, std::uint64_t budget = kDefaultDimensionBudget)
      : g_(g), budget_(budget) {}

  Rational graph_dimension();
  /// 1 + dim(S(x)).
  Rational vertex_dimension(Vertex x);
  /// Dimension of the induced subgraph on a sorted vertex set.
  Rational dimension_of(const std::vector<Vertex>& sorted_vertices);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const Graph& g_;
  std::uint64_t budget_;
  std::map<std::vector<Vertex>, Rational> memo_;
};

Rational inductive_dimension(const Graph& g, std::uint64_t budget = kDefaultDimensionBudget);
Rational vertex_dimension(const Graph& g, Vertex x, std::uint64_t budget = kDefaultDimensionBudget);

/// Polynomial with exact rational coefficients, index = degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const Polynomial& p);

/// d_n(p): expected inductive dimension of G(n, p).
Polynomial expected_dimension_polynomial(std::size_t n);

/// Degree and second-neighborhood statistics.
///
/// s(x) = log(delta_2(x) / delta(x)); vertices with delta(x) = 0 or
/// delta_2(x) = 0 have no curvature and are left out of eta.
struct CurvatureSummary {
  double mean_degree = 0.0;
  double mean_second_degree = 0.0;
  Rational edge_density;
  std::optional<double> hilbert_action;
  std::size_t excluded = 0;
  std::vector<std::size_t> second_degree;
  std::vector<std::optional<double>> curvature;
};

CurvatureSummary curvature_summary(const Graph& g);
CurvatureSummary curvature_summary(const Graph& g, const DistanceMatrix& d);

/// mu ≈ 1 + log(delta/n) / log(delta/delta_2) from global averages.
struct Formula54 {
  enum class Status { Defined, NoEdges, NoSecondNeighbors, DegenerateRatio, Saturated };
  Status status = Status::Defined;
  double value = 0.0;

  bool defined() const { return status == Status::Defined; }
};

std::string to_string(Formula54::Status status);

Formula54 formula54_estimate(const Graph& g);
Formula54 formula54_estimate(const CurvatureSummary& summary, std::size_t n);

}  // namespace netfunc
