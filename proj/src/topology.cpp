#include "netfunc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "netfunc/error.hpp"

namespace netfunc {

std::int64_t euler_characteristic(const SimplexCounts& counts) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    const auto c = static_cast<std::int64_t>(counts.counts[k]);
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

std::int64_t euler_characteristic(const Graph& g, std::uint64_t budget) {
  return euler_characteristic(simplex_counts(g, budget));
}

Rational DimensionEvaluator::graph_dimension() {
  std::vector<Vertex> all(g_.order());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return dimension_of(all);
}

Rational DimensionEvaluator::vertex_dimension(Vertex x) {
  const auto nbrs = g_.neighbors(x);
  return Rational(1) + dimension_of(std::vector<Vertex>(nbrs.begin(), nbrs.end()));
}

Rational DimensionEvaluator::dimension_of(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return Rational(-1);
  if (vertices.size() == 1) return Rational(0);
  if (const auto it = memo_.find(vertices); it != memo_.end()) return it->second;
  if (memo_.size() >= budget_) {
    throw Error(ErrorCode::RecursionBudgetExceeded,
                "dimension recursion exceeded " + std::to_string(budget_) + " subgraphs");
  }
  Rational sum(0);
  std::vector<Vertex> inner;
  for (Vertex v : vertices) {
    inner.clear();
    const auto nbrs = g_.neighbors(v);
    std::set_intersection(vertices.begin(), vertices.end(), nbrs.begin(), nbrs.end(),
                          std::back_inserter(inner));
    sum += dimension_of(inner);
  }
  Rational result = Rational(1) + sum / BigInt(vertices.size());
  memo_.emplace(vertices, result);
  return result;
}

Rational inductive_dimension(const Graph& g, std::uint64_t budget) {
  return DimensionEvaluator(g, budget).graph_dimension();
}

Rational vertex_dimension(const Graph& g, Vertex x, std::uint64_t budget) {
  return DimensionEvaluator(g, budget).vertex_dimension(x);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string to_string(const Polynomial& p) {
  if (p.coefficients().empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const auto& c = p.coefficients()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "p";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial expected_dimension_polynomial(std::size_t n) {
  const Polynomial p({Rational(0), Rational(1)});
  const Polynomial q({Rational(1), Rational(-1)});  // 1 - p
  std::vector<Polynomial> p_pow{Polynomial::constant(1)};
  std::vector<Polynomial> q_pow{Polynomial::constant(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    p_pow.push_back(p_pow.back() * p);
    q_pow.push_back(q_pow.back() * q);
  }
  // d_{m+1} = 1 + sum_k C(m,k) p^k (1-p)^(m-k) d_k, starting from d_0 = -1.
  std::vector<Polynomial> d{Polynomial::constant(-1)};
  for (std::size_t m = 0; m < n; ++m) {
    Polynomial next = Polynomial::constant(1);
    BigInt binom = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      next = next + Rational(binom) * (p_pow[k] * q_pow[m - k] * d[k]);
      binom = binom * (m - k) / (k + 1);
    }
    d.push_back(std::move(next));
  }
  return d[n];
}

CurvatureSummary curvature_summary(const Graph& g) {
  return curvature_summary(g, all_pairs_distances(g));
}

CurvatureSummary curvature_summary(const Graph& g, const DistanceMatrix& d) {
  const std::size_t n = g.order();
  CurvatureSummary out;
  out.second_degree.assign(n, 0);
  out.curvature.assign(n, std::nullopt);
  if (n == 0) return out;
  double degree_total = 0.0;
  double second_total = 0.0;
  double curvature_total = 0.0;
  std::size_t admissible = 0;
  for (Vertex x = 0; x < n; ++x) {
    std::size_t second = 0;
    for (auto dist : d.row(x)) second += dist == 2;
    out.second_degree[x] = second;
    const std::size_t deg = g.degree(x);
    degree_total += static_cast<double>(deg);
    second_total += static_cast<double>(second);
    if (deg == 0 || second == 0) {
      ++out.excluded;
      continue;
    }
    const double s = std::log(static_cast<double>(second) / static_cast<double>(deg));
    out.curvature[x] = s;
    curvature_total += s;
    ++admissible;
  }
  out.mean_degree = degree_total / static_cast<double>(n);
  out.mean_second_degree = second_total / static_cast<double>(n);
  out.edge_density = n >= 2 ? Rational(BigInt(2 * g.size()), BigInt(n) * BigInt(n - 1))
                            : Rational(0);
  if (admissible > 0) out.hilbert_action = curvature_total / static_cast<double>(admissible);
  return out;
}

std::string to_string(Formula54::Status status) {
  switch (status) {
    case Formula54::Status::Defined: return "defined";
    case Formula54::Status::NoEdges: return "no_edges";
    case Formula54::Status::NoSecondNeighbors: return "no_second_neighbors";
    case Formula54::Status::DegenerateRatio: return "degenerate_ratio";
    case Formula54::Status::Saturated: return "saturated";
  }
  return "unknown";
}

Formula54 formula54_estimate(const CurvatureSummary& summary, std::size_t n) {
  const double delta = summary.mean_degree;
  const double delta2 = summary.mean_second_degree;
  if (!(delta > 0.0)) return {Formula54::Status::NoEdges, 0.0};
  if (!(delta2 > 0.0)) return {Formula54::Status::NoSecondNeighbors, 0.0};
  if (delta == delta2) return {Formula54::Status::DegenerateRatio, 0.0};
  if (delta >= static_cast<double>(n)) return {Formula54::Status::Saturated, 0.0};
  return {Formula54::Status::Defined,
          1.0 + std::log(delta / static_cast<double>(n)) / std::log(delta / delta2)};
}

Formula54 formula54_estimate(const Graph& g) {
  return formula54_estimate(curvature_summary(g), g.order());
}

}  // namespace netfunc
