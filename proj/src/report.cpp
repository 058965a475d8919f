#include "netfunc/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "netfunc/error.hpp"
#include "netfunc/spectral.hpp"

namespace netfunc {

FunctionalValue FunctionalValue::of(const Rational& r) {
  FunctionalValue v;
  v.kind = Kind::Rational;
  v.rational = r;
  return v;
}

FunctionalValue FunctionalValue::of(double r) {
  FunctionalValue v;
  v.kind = Kind::Real;
  v.real = r;
  return v;
}

FunctionalValue FunctionalValue::of_integer(std::int64_t i) {
  FunctionalValue v;
  v.kind = Kind::Integer;
  v.integer = i;
  return v;
}

FunctionalValue FunctionalValue::of(const BigInt& b) {
  FunctionalValue v;
  v.kind = Kind::BigInteger;
  v.big = b;
  return v;
}

FunctionalValue FunctionalValue::of(std::vector<std::uint64_t> values) {
  FunctionalValue v;
  v.kind = Kind::IntegerVector;
  v.integers = std::move(values);
  return v;
}

FunctionalValue FunctionalValue::skipped(std::string reason) {
  FunctionalValue v;
  v.status = Status::Skipped;
  v.reason = std::move(reason);
  return v;
}

FunctionalValue FunctionalValue::undefined(std::string reason) {
  FunctionalValue v;
  v.status = Status::Undefined;
  v.reason = std::move(reason);
  return v;
}

const FunctionalValue* FunctionalReport::find(const std::string& name) const {
  for (const auto& [key, value] : functionals)
    if (key == name) return &value;
  return nullptr;
}

const std::vector<std::string>& known_functionals() {
  static const std::vector<std::string> names = {
      "mu",        "nu",        "lambda",     "wiener",      "variance",  "centrality",
      "magnitude", "diameter",  "simplex_counts", "chi",     "iota",      "delta",
      "delta2",    "epsilon",   "eta",        "formula54",   "xi",        "log_xi",
      "theta",     "trees",     "trace_bound", "beta",       "chromatic", "arboricity",
      "sigma",
  };
  return names;
}

std::vector<std::string> resolve_functionals(const std::vector<std::string>& names) {
  const auto& known = known_functionals();
  if (names.empty()) return known;
  std::vector<std::string> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& k : known)
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
      continue;
    }
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorCode::UnknownFunctional, "unknown functional '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

namespace {

bool is_cap_error(ErrorCode code) {
  return code == ErrorCode::SizeCapExceeded || code == ErrorCode::CliqueBudgetExceeded ||
         code == ErrorCode::RecursionBudgetExceeded;
}

// Shared intermediate results, computed on first use.
class AnalysisContext {
 public:
  AnalysisContext(const Graph& g, const ExactCaps& caps) : g(g), caps(caps) {}

  const DistanceMatrix& distances() {
    if (!d_) d_ = all_pairs_distances(g);
    return *d_;
  }
  const Rational& mu() {
    if (!mu_) mu_ = characteristic_length(g, distances());
    return *mu_;
  }
  const Rational& nu() {
    if (!nu_) nu_ = mean_cluster(g);
    return *nu_;
  }
  const CurvatureSummary& curvature() {
    if (!curv_) curv_ = curvature_summary(g, distances());
    return *curv_;
  }
  const LaplacianSpectrum& spectrum() {
    if (!spec_) spec_ = laplacian_spectrum(g);
    return *spec_;
  }
  bool connected() {
    if (!connected_) connected_ = is_connected(g);
    return *connected_;
  }
  void require_connected(const char* what) {
    if (!connected()) throw Error(ErrorCode::Disconnected, std::string(what) + " requires a connected graph");
  }

  const Graph& g;
  const ExactCaps& caps;

 private:
  std::optional<DistanceMatrix> d_;
  std::optional<Rational> mu_;
  std::optional<Rational> nu_;
  std::optional<CurvatureSummary> curv_;
  std::optional<LaplacianSpectrum> spec_;
  std::optional<bool> connected_;
};

using Evaluator = std::function<FunctionalValue(AnalysisContext&)>;

const std::map<std::string, Evaluator>& evaluators() {
  using V = FunctionalValue;
  static const std::map<std::string, Evaluator> table = {
      {"mu", [](AnalysisContext& c) { return V::of(c.mu()); }},
      {"nu", [](AnalysisContext& c) { return V::of(c.nu()); }},
      {"lambda",
       [](AnalysisContext& c) {
         const auto r = cluster_length_ratio(c.mu(), c.nu());
         switch (r.status) {
           case ClusterLengthRatio::Status::ClusterZero: return V::undefined("cluster_zero");
           case ClusterLengthRatio::Status::ClusterOne: return V::undefined("cluster_one");
           default: return V::of(r.value);
         }
       }},
      {"wiener", [](AnalysisContext& c) { return V::of(wiener_index(c.distances())); }},
      {"variance",
       [](AnalysisContext& c) {
         return V::of_integer(static_cast<std::int64_t>(distance_variance(c.distances())));
       }},
      {"centrality", [](AnalysisContext& c) { return V::of(mean_centrality(c.distances())); }},
      {"magnitude", [](AnalysisContext& c) { return V::of(magnitude(c.distances())); }},
      {"diameter",
       [](AnalysisContext& c) { return V::of_integer(static_cast<std::int64_t>(diameter(c.g))); }},
      {"simplex_counts", [](AnalysisContext& c) { return V::of(simplex_counts(c.g).counts); }},
      {"chi", [](AnalysisContext& c) { return V::of_integer(euler_characteristic(c.g)); }},
      {"iota", [](AnalysisContext& c) { return V::of(inductive_dimension(c.g)); }},
      {"delta", [](AnalysisContext& c) { return V::of(c.curvature().mean_degree); }},
      {"delta2", [](AnalysisContext& c) { return V::of(c.curvature().mean_second_degree); }},
      {"epsilon", [](AnalysisContext& c) { return V::of(c.curvature().edge_density); }},
      {"eta",
       [](AnalysisContext& c) {
         const auto& s = c.curvature();
         if (!s.hilbert_action) return V::undefined("no_admissible_vertices");
         V v = V::of(*s.hilbert_action);
         v.witness = {{"excluded_vertices", s.excluded}};
         return v;
       }},
      {"formula54",
       [](AnalysisContext& c) {
         const auto f = formula54_estimate(c.curvature(), c.g.order());
         if (!f.defined()) return V::undefined(to_string(f.status));
         return V::of(f.value);
       }},
      {"xi",
       [](AnalysisContext& c) {
         const auto x = spectral_complexity(c.spectrum());
         if (!x.value) return V::undefined("overflow; see log_xi");
         return V::of(*x.value);
       }},
      {"log_xi", [](AnalysisContext& c) { return V::of(spectral_complexity(c.spectrum()).log_value); }},
      {"theta", [](AnalysisContext& c) { return V::of(forest_complexity(c.g)); }},
      {"trees", [](AnalysisContext& c) { return V::of(spanning_tree_count(c.g)); }},
      {"trace_bound",
       [](AnalysisContext& c) {
         c.require_connected("trace bound");
         return V::of(pseudoinverse_trace_bound(c.spectrum()));
       }},
      {"beta",
       [](AnalysisContext& c) {
         const auto set = maximum_independent_set(c.g, c.caps.independence);
         V v = V::of_integer(static_cast<std::int64_t>(set.size));
         v.witness = set.vertices;
         return v;
       }},
      {"chromatic",
       [](AnalysisContext& c) {
         return V::of_integer(static_cast<std::int64_t>(chromatic_number(c.g, c.caps.chromatic)));
       }},
      {"arboricity",
       [](AnalysisContext& c) {
         const auto a = arboricity(c.g, c.caps.arboricity);
         V v = V::of_integer(static_cast<std::int64_t>(a.arboricity));
         nlohmann::json forests = nlohmann::json::array();
         for (const auto& forest : a.forests) {
           nlohmann::json edges = nlohmann::json::array();
           for (auto [x, y] : forest) edges.push_back({x, y});
           forests.push_back(std::move(edges));
         }
         v.witness = std::move(forests);
         return v;
       }},
      {"sigma", [](AnalysisContext& c) { return V::of(scale_measure(c.g)); }},
  };
  return table;
}

}  // namespace

FunctionalReport analyze(const Graph& g, const std::vector<std::string>& functionals,
                         const AnalyzeOptions& options) {
  const auto names = resolve_functionals(functionals);
  FunctionalReport report;
  report.n = g.order();
  report.m = g.size();
  report.components = connected_components(g).size();
  AnalysisContext ctx(g, options.caps);
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    FunctionalValue value;
    try {
      value = evaluators().at(name)(ctx);
    } catch (const Error& e) {
      if (is_cap_error(e.code())) {
        if (options.strict) throw;
        value = FunctionalValue::skipped(std::string(to_string(e.code())) + ": " + e.what());
      } else {
        value = FunctionalValue::undefined(std::string(to_string(e.code())) + ": " + e.what());
      }
    }
    value.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.functionals.emplace_back(name, std::move(value));
  }
  if (options.include_profile) report.profile = local_profile(g);
  return report;
}

nlohmann::json rational_to_json(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()}};
}

nlohmann::json to_json(const FunctionalValue& v) {
  using Status = FunctionalValue::Status;
  using Kind = FunctionalValue::Kind;
  nlohmann::json j;
  if (v.status != Status::Ok) {
    j["status"] = v.status == Status::Skipped ? "skipped" : "undefined";
    j["reason"] = v.reason;
  } else {
    j["status"] = "ok";
    switch (v.kind) {
      case Kind::Rational:
        j["kind"] = "rational";
        j["value"] = rational_to_json(v.rational);
        break;
      case Kind::Real:
        j["kind"] = "real";
        j["value"] = v.real;
        break;
      case Kind::Integer:
        j["kind"] = "integer";
        j["value"] = v.integer;
        break;
      case Kind::BigInteger:
        j["kind"] = "big_integer";
        j["value"] = v.big.str();
        break;
      case Kind::IntegerVector:
        j["kind"] = "integer_vector";
        j["value"] = v.integers;
        break;
    }
    if (!v.witness.is_null()) j["witness"] = v.witness;
  }
  j["time_ms"] = v.millis;
  return j;
}

nlohmann::json to_json(const FunctionalReport& report) {
  nlohmann::json j;
  j["graph"] = {{"n", report.n}, {"m", report.m}, {"components", report.components}};
  nlohmann::json fs = nlohmann::json::object();
  for (const auto& [name, value] : report.functionals) fs[name] = to_json(value);
  j["functionals"] = std::move(fs);
  if (report.profile) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : *report.profile) {
      nlohmann::json row = {{"vertex", r.vertex},
                            {"degree", r.degree},
                            {"cluster", rational_to_json(r.cluster)},
                            {"local_length", rational_to_json(r.local_length)},
                            {"length_degenerate", r.length_degenerate},
                            {"dimension", rational_to_json(r.dimension)}};
      row["mean_distance"] = r.mean_distance ? rational_to_json(*r.mean_distance) : nlohmann::json();
      row["centrality"] = r.centrality ? rational_to_json(*r.centrality) : nlohmann::json();
      row["curvature"] = r.curvature ? nlohmann::json(*r.curvature) : nlohmann::json();
      rows.push_back(std::move(row));
    }
    j["profile"] = std::move(rows);
  }
  return j;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
  return arr;
}

nlohmann::json to_json(const std::vector<BoundCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"relation", c.relation},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs},
                   {"status", to_string(c.status)},
                   {"equality", c.equality},
                   {"note", c.note}});
  }
  return arr;
}

nlohmann::json to_json(const ExtremalSearch& search) {
  nlohmann::json j;
  j["n"] = search.n;
  j["labeled_graphs"] = search.labeled_graphs;
  j["connected_graphs"] = search.connected_graphs;
  auto edges_json = [](const Graph& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    return arr;
  };
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : search.results) {
    results.push_back({{"functional", to_string(r.functional)},
                       {"min", r.min_value},
                       {"max", r.max_value},
                       {"min_exact", r.min_exact},
                       {"max_exact", r.max_exact},
                       {"argmin_edges", edges_json(r.argmin)},
                       {"argmax_edges", edges_json(r.argmax)},
                       {"evaluated", r.evaluated},
                       {"skipped", r.skipped},
                       {"histogram", {{"lo", r.histogram.lo}, {"hi", r.histogram.hi},
                                      {"counts", r.histogram.counts}}}});
  }
  j["results"] = std::move(results);
  return j;
}

std::string to_csv(const FunctionalReport& report) {
  using Status = FunctionalValue::Status;
  using Kind = FunctionalValue::Kind;
  std::ostringstream out;
  out << "functional,status,kind,value,reason\n";
  for (const auto& [name, v] : report.functionals) {
    out << name << ',';
    if (v.status != Status::Ok) {
      out << (v.status == Status::Skipped ? "skipped" : "undefined") << ",,,\"" << v.reason
          << "\"\n";
      continue;
    }
    out << "ok,";
    switch (v.kind) {
      case Kind::Rational: out << "rational," << to_string(v.rational); break;
      case Kind::Real: {
        std::ostringstream num;
        num.precision(17);
        num << v.real;
        out << "real," << num.str();
        break;
      }
      case Kind::Integer: out << "integer," << v.integer; break;
      case Kind::BigInteger: out << "big_integer," << v.big.str(); break;
      case Kind::IntegerVector: {
        out << "integer_vector,";
        for (std::size_t i = 0; i < v.integers.size(); ++i) out << (i ? " " : "") << v.integers[i];
        break;
      }
    }
    out << ",\n";
  }
  return out.str();
}

}  // namespace netfunc
