#include "netfunc/experiments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include "netfunc/error.hpp"
#include "netfunc/metric.hpp"
#include "netfunc/parallel.hpp"
#include "netfunc/rng.hpp"
#include "netfunc/spectral.hpp"
#include "netfunc/topology.hpp"

#include "json.hpp"

namespace netfunc {

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Bit-parallel evaluation for graphs with at most 7 vertices.

struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint8_t, kMaxExtremalOrder> adj{};
};

SmallGraph small_from_mask(std::size_t n, std::uint64_t mask) {
  SmallGraph g;
  g.n = n;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) {
        g.adj[u] |= static_cast<std::uint8_t>(1u << v);
        g.adj[v] |= static_cast<std::uint8_t>(1u << u);
      }
    }
  }
  return g;
}

unsigned neighbors_of_set(const SmallGraph& g, unsigned set) {
  unsigned out = 0;
  while (set) {
    const int v = std::countr_zero(set);
    set &= set - 1;
    out |= g.adj[v];
  }
  return out;
}

bool small_connected(const SmallGraph& g) {
  const unsigned all = (1u << g.n) - 1;
  unsigned reach = 1;
  for (;;) {
    const unsigned next = reach | neighbors_of_set(g, reach);
    if (next == reach) return reach == all;
    reach = next;
  }
}

// Wiener index and per-vertex distance-2 counts in one BFS sweep.
std::uint64_t small_wiener(const SmallGraph& g, std::array<unsigned, kMaxExtremalOrder>& second) {
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    unsigned visited = 1u << s;
    unsigned frontier = visited;
    unsigned level = 0;
    second[s] = 0;
    while (frontier) {
      ++level;
      const unsigned next = neighbors_of_set(g, frontier) & ~visited;
      const auto count = static_cast<unsigned>(std::popcount(next));
      total += static_cast<std::uint64_t>(level) * count;
      if (level == 2) second[s] = count;
      visited |= next;
      frontier = next;
    }
  }
  return total;
}

// Sum over cliques of (-1)^(|C|-1), extending only by higher vertices.
std::int64_t small_chi(const SmallGraph& g, unsigned candidates, std::int64_t sign) {
  std::int64_t total = 0;
  while (candidates) {
    const int w = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += sign;
    const unsigned higher = candidates & g.adj[w];
    if (higher) total += small_chi(g, higher, -sign);
  }
  return total;
}

std::optional<double> small_eta(const SmallGraph& g,
                                const std::array<unsigned, kMaxExtremalOrder>& second) {
  double total = 0.0;
  std::size_t admissible = 0;
  for (std::size_t x = 0; x < g.n; ++x) {
    const auto deg = static_cast<unsigned>(std::popcount(static_cast<unsigned>(g.adj[x])));
    if (deg == 0 || second[x] == 0) continue;
    total += std::log(static_cast<double>(second[x]) / static_cast<double>(deg));
    ++admissible;
  }
  if (admissible == 0) return std::nullopt;
  return total / static_cast<double>(admissible);
}

// Kirchhoff: xi = n * tau; tau from an int64 Bareiss on the reduced Laplacian
// (entries are tiny for n <= 7, so every intermediate minor fits).
double small_log_complexity(const SmallGraph& g) {
  const std::size_t m = g.n - 1;
  std::array<std::array<std::int64_t, kMaxExtremalOrder>, kMaxExtremalOrder> a{};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t u = i + 1;
      const std::size_t v = j + 1;
      a[i][j] = u == v ? std::popcount(static_cast<unsigned>(g.adj[u]))
                       : -static_cast<std::int64_t>(g.adj[u] >> v & 1);
    }
  }
  std::int64_t previous = 1;
  std::int64_t sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return -std::numeric_limits<double>::infinity();
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  const std::int64_t tau = m == 0 ? 1 : sign * a[m - 1][m - 1];
  return std::log(static_cast<double>(g.n) * static_cast<double>(tau));
}

struct FunctionalAccumulator {
  bool seen = false;
  double min_value = 0.0;
  double max_value = 0.0;
  std::uint64_t min_mask = 0;
  std::uint64_t max_mask = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  std::vector<double> values;

  void add(double v, std::uint64_t mask) {
    ++evaluated;
    values.push_back(v);
    if (!seen || v < min_value) {
      min_value = v;
      min_mask = mask;
    }
    if (!seen || v > max_value) {
      max_value = v;
      max_mask = mask;
    }
    seen = true;
  }

  // `later` covers masks after this one's, so ties keep the earlier witness.
  void merge(FunctionalAccumulator& later) {
    evaluated += later.evaluated;
    skipped += later.skipped;
    values.insert(values.end(), later.values.begin(), later.values.end());
    later.values.clear();
    if (!later.seen) return;
    if (!seen || later.min_value < min_value) {
      min_value = later.min_value;
      min_mask = later.min_mask;
    }
    if (!seen || later.max_value > max_value) {
      max_value = later.max_value;
      max_mask = later.max_mask;
    }
    seen = true;
  }
};

struct ChunkResult {
  std::uint64_t connected = 0;
  std::vector<FunctionalAccumulator> acc;
};

Histogram make_histogram(const std::vector<double>& values, double lo, double hi) {
  Histogram h{lo, hi, std::vector<std::uint64_t>(kHistogramBins, 0)};
  const double width = hi - lo;
  for (double v : values) {
    std::size_t bin = 0;
    if (width > 0) {
      bin = static_cast<std::size_t>((v - lo) / width * static_cast<double>(kHistogramBins));
      bin = std::min(bin, kHistogramBins - 1);
    }
    ++h.counts[bin];
  }
  return h;
}

}  // namespace

std::string to_string(ExtremalFunctional f) {
  switch (f) {
    case ExtremalFunctional::CharacteristicLength: return "mu";
    case ExtremalFunctional::EulerCharacteristic: return "chi";
    case ExtremalFunctional::HilbertAction: return "eta";
    case ExtremalFunctional::LogComplexity: return "logxi";
  }
  return "unknown";
}

ExtremalFunctional parse_extremal_functional(const std::string& name) {
  if (name == "mu") return ExtremalFunctional::CharacteristicLength;
  if (name == "chi") return ExtremalFunctional::EulerCharacteristic;
  if (name == "eta") return ExtremalFunctional::HilbertAction;
  if (name == "logxi" || name == "log_xi") return ExtremalFunctional::LogComplexity;
  throw Error(ErrorCode::UnknownFunctional, "unknown extremal functional '" + name + "'");
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

ExtremalSearch extremal_search(std::size_t n, const std::vector<ExtremalFunctional>& functionals,
                               unsigned workers) {
  if (n < 1 || n > kMaxExtremalOrder) {
    throw Error(ErrorCode::InvalidParam, "extremal search supports 1 <= n <= 7");
  }
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::uint64_t chunk_size = std::min<std::uint64_t>(total, std::uint64_t{1} << 14);
  const std::uint64_t chunks = total / chunk_size;
  const double ordered_pairs = static_cast<double>(n * (n - 1));

  std::vector<ChunkResult> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t c) {
    ChunkResult& out = partial[c];
    out.acc.resize(functionals.size());
    std::array<unsigned, kMaxExtremalOrder> second{};
    for (std::uint64_t mask = c * chunk_size; mask < (c + 1) * chunk_size; ++mask) {
      const SmallGraph g = small_from_mask(n, mask);
      if (!small_connected(g)) continue;
      ++out.connected;
      bool distances_ready = false;
      std::uint64_t wiener = 0;
      for (std::size_t f = 0; f < functionals.size(); ++f) {
        const auto kind = functionals[f];
        if ((kind == ExtremalFunctional::CharacteristicLength ||
             kind == ExtremalFunctional::HilbertAction) && !distances_ready) {
          wiener = small_wiener(g, second);
          distances_ready = true;
        }
        switch (kind) {
          case ExtremalFunctional::CharacteristicLength:
            out.acc[f].add(n < 2 ? 0.0 : static_cast<double>(wiener) / ordered_pairs, mask);
            break;
          case ExtremalFunctional::EulerCharacteristic:
            out.acc[f].add(static_cast<double>(small_chi(g, (1u << n) - 1, 1)), mask);
            break;
          case ExtremalFunctional::HilbertAction: {
            const auto eta = small_eta(g, second);
            if (eta) {
              out.acc[f].add(*eta, mask);
            } else {
              ++out.acc[f].skipped;
            }
            break;
          }
          case ExtremalFunctional::LogComplexity:
            out.acc[f].add(n < 2 ? 0.0 : small_log_complexity(g), mask);
            break;
        }
      }
    }
  });

  ExtremalSearch search;
  search.n = n;
  search.labeled_graphs = total;
  std::vector<FunctionalAccumulator> merged(functionals.size());
  for (auto& chunk : partial) {
    search.connected_graphs += chunk.connected;
    for (std::size_t f = 0; f < functionals.size(); ++f) merged[f].merge(chunk.acc[f]);
  }
  for (std::size_t f = 0; f < functionals.size(); ++f) {
    const auto& acc = merged[f];
    ExtremalResult r;
    r.functional = functionals[f];
    r.min_value = acc.min_value;
    r.max_value = acc.max_value;
    r.argmin = graph_from_edge_mask(n, acc.min_mask);
    r.argmax = graph_from_edge_mask(n, acc.max_mask);
    r.evaluated = acc.evaluated;
    r.skipped = acc.skipped;
    if (functionals[f] == ExtremalFunctional::CharacteristicLength && acc.seen && n >= 2) {
      r.min_exact = to_string(characteristic_length(r.argmin));
      r.max_exact = to_string(characteristic_length(r.argmax));
    } else if (functionals[f] == ExtremalFunctional::EulerCharacteristic && acc.seen) {
      r.min_exact = std::to_string(static_cast<std::int64_t>(acc.min_value));
      r.max_exact = std::to_string(static_cast<std::int64_t>(acc.max_value));
    }
    r.histogram = make_histogram(acc.values, acc.min_value, acc.max_value);
    search.results.push_back(std::move(r));
  }
  return search;
}

std::optional<double> evaluate_extremal_functional(ExtremalFunctional f, const Graph& g) {
  switch (f) {
    case ExtremalFunctional::CharacteristicLength: return to_double(characteristic_length(g));
    case ExtremalFunctional::EulerCharacteristic:
      return static_cast<double>(euler_characteristic(g));
    case ExtremalFunctional::HilbertAction: return curvature_summary(g).hilbert_action;
    case ExtremalFunctional::LogComplexity: return spectral_complexity(g).log_value;
  }
  return std::nullopt;
}

void write_histogram_csv(std::ostream& out, const ExtremalSearch& search) {
  out << "functional,bin,bin_lo,bin_hi,count\n";
  for (const auto& r : search.results) {
    const auto& h = r.histogram;
    const double width = (h.hi - h.lo) / static_cast<double>(kHistogramBins);
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      out << to_string(r.functional) << ',' << b << ',' << format_double(h.lo + width * b) << ','
          << format_double(h.lo + width * (b + 1)) << ',' << h.counts[b] << '\n';
    }
  }
}

std::optional<double> pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

LambdaDimensionSweep lambda_dimension_sweep(std::size_t n, const std::vector<double>& p_grid,
                                            std::size_t samples_per_p, std::uint64_t seed,
                                            unsigned workers) {
  struct Sample {
    std::optional<double> lambda;
    double dimension = 0.0;
  };
  const std::size_t tasks = p_grid.size() * samples_per_p;
  std::vector<Sample> samples(tasks);
  parallel_for(tasks, workers, [&](std::size_t t) {
    const std::size_t i = t / samples_per_p;
    const std::size_t j = t % samples_per_p;
    const Graph g = erdos_renyi(n, p_grid[i], Rng(seed, i).split(j).next());
    const auto ratio = cluster_length_ratio(g);
    if (ratio.defined()) samples[t].lambda = ratio.value;
    samples[t].dimension = to_double(inductive_dimension(g));
  });

  LambdaDimensionSweep sweep;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    LambdaDimensionRow row;
    row.p = p_grid[i];
    row.samples = samples_per_p;
    double lambda_total = 0.0;
    double dim_total = 0.0;
    std::size_t defined = 0;
    for (std::size_t j = 0; j < samples_per_p; ++j) {
      const auto& s = samples[i * samples_per_p + j];
      dim_total += s.dimension;
      if (s.lambda) {
        lambda_total += *s.lambda;
        ++defined;
      }
    }
    row.lambda_excluded = samples_per_p - defined;
    row.mean_dimension = samples_per_p ? dim_total / static_cast<double>(samples_per_p) : 0.0;
    row.mean_lambda = defined ? lambda_total / static_cast<double>(defined) : 0.0;
    if (defined > 0) {
      xs.push_back(row.mean_lambda);
      ys.push_back(row.mean_dimension);
    }
    sweep.rows.push_back(row);
  }
  sweep.pearson = pearson_correlation(xs, ys);
  return sweep;
}

SweepRecord make_sweep_record(const ModelSpec& spec) {
  const Graph g = make_graph(spec);
  const auto d = all_pairs_distances(g);
  SweepRecord r;
  r.model = to_string(spec);
  r.seed = spec.seed;
  r.n = g.order();
  const Rational mu = characteristic_length(g, d);
  const Rational nu = mean_cluster(g);
  r.mu = to_double(mu);
  r.nu = to_double(nu);
  const auto ratio = cluster_length_ratio(mu, nu);
  switch (ratio.status) {
    case ClusterLengthRatio::Status::Defined: r.lambda = ratio.value; break;
    case ClusterLengthRatio::Status::ClusterZero: r.lambda_flag = "cluster_zero"; break;
    case ClusterLengthRatio::Status::ClusterOne: r.lambda_flag = "cluster_one"; break;
  }
  try {
    r.iota = to_double(inductive_dimension(g));
  } catch (const Error& e) {
    r.iota_flag = std::string(to_string(e.code()));
  }
  const auto curv = curvature_summary(g, d);
  r.delta = curv.mean_degree;
  r.epsilon = to_double(curv.edge_density);
  if (curv.hilbert_action) {
    r.eta = *curv.hilbert_action;
  } else {
    r.eta_flag = "no_admissible_vertices";
  }
  try {
    r.chi = euler_characteristic(g);
  } catch (const Error& e) {
    r.chi_flag = std::string(to_string(e.code()));
  }
  const auto f54 = formula54_estimate(curv, g.order());
  if (f54.defined()) {
    r.formula54 = f54.value;
  } else {
    r.formula54_flag = to_string(f54.status);
  }
  return r;
}

std::vector<SweepRecord> growth_sweep(const ModelSpec& base, const std::vector<std::size_t>& n_list,
                                      std::size_t seeds_per_n, unsigned workers) {
  std::vector<SweepRecord> records(n_list.size() * seeds_per_n);
  parallel_for(records.size(), workers, [&](std::size_t t) {
    ModelSpec spec = base;
    spec.n = n_list[t / seeds_per_n];
    spec.seed = base.seed + t % seeds_per_n;
    records[t] = make_sweep_record(spec);
  });
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "model,seed,n,mu,nu,lambda,lambda_flag,iota,iota_flag,delta,epsilon,eta,eta_flag,"
         "chi,chi_flag,formula54,formula54_flag\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& r : records) {
    out << '"' << r.model << '"' << ',' << r.seed << ',' << r.n << ',' << format_double(r.mu)
        << ',' << format_double(r.nu) << ',' << opt(r.lambda) << ',' << r.lambda_flag << ','
        << opt(r.iota) << ',' << r.iota_flag << ',' << format_double(r.delta) << ','
        << format_double(r.epsilon) << ',' << opt(r.eta) << ',' << r.eta_flag << ','
        << (r.chi ? std::to_string(*r.chi) : std::string()) << ',' << r.chi_flag << ','
        << opt(r.formula54) << ',' << r.formula54_flag << '\n';
  }
}

std::string sweep_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  for (const auto& r : records) {
    arr.push_back({{"model", r.model},
                   {"seed", r.seed},
                   {"n", r.n},
                   {"mu", r.mu},
                   {"nu", r.nu},
                   {"lambda", opt(r.lambda)},
                   {"lambda_flag", r.lambda_flag},
                   {"iota", opt(r.iota)},
                   {"iota_flag", r.iota_flag},
                   {"delta", r.delta},
                   {"epsilon", r.epsilon},
                   {"eta", opt(r.eta)},
                   {"eta_flag", r.eta_flag},
                   {"chi", opt(r.chi)},
                   {"chi_flag", r.chi_flag},
                   {"formula54", opt(r.formula54)},
                   {"formula54_flag", r.formula54_flag}});
  }
  return arr.dump(2);
}

// ---------------------------------------------------------------------------

std::string to_string(BoundCheck::Status status) {
  switch (status) {
    case BoundCheck::Status::Holds: return "holds";
    case BoundCheck::Status::Violated: return "violated";
    case BoundCheck::Status::Skipped: return "skipped";
  }
  return "unknown";
}

std::uint64_t tree_wiener_index(std::size_t n, const std::vector<Edge>& tree_edges) {
  if (n < 2) return 0;
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Iterative DFS from 0; each non-root vertex's subtree size s contributes s (n - s).
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::uint64_t> size(n, 1);
  std::uint64_t total = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    const Vertex v = order[i];
    total += size[v] * (n - size[v]);
    size[parent[v]] += size[v];
  }
  return 2 * total;
}

std::uint64_t for_each_spanning_tree(const Graph& g,
                                     const std::function<void(const std::vector<Edge>&)>& fn) {
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) return 0;
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Edge> chosen;
  chosen.reserve(n);
  std::uint64_t count = 0;

  // Union-find over the chosen edges, union by size, undone on backtrack.
  std::vector<Vertex> parent(n);
  std::vector<std::uint32_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  // Scratch copy for "can the chosen edges plus edges[from..] still span?".
  std::vector<Vertex> probe(n);
  auto still_spans = [&](std::size_t from) {
    std::size_t components = n - chosen.size();
    for (std::size_t v = 0; v < n; ++v) probe[v] = find(static_cast<Vertex>(v));
    auto root = [&](Vertex x) {
      while (probe[x] != x) x = probe[x] = probe[probe[x]];
      return x;
    };
    for (std::size_t i = from; i < m && components > 1; ++i) {
      const Vertex a = root(edges[i].first), b = root(edges[i].second);
      if (a != b) {
        probe[a] = b;
        --components;
      }
    }
    return components == 1;
  };

  std::function<void(std::size_t)> recurse = [&](std::size_t index) {
    if (chosen.size() == n - 1) {
      ++count;
      fn(chosen);
      return;
    }
    if (m - index < n - 1 - chosen.size()) return;
    const auto [u, v] = edges[index];
    Vertex a = find(u), b = find(v);
    if (a != b) {
      if (size[a] < size[b]) std::swap(a, b);
      parent[b] = a;
      size[a] += size[b];
      chosen.push_back(edges[index]);
      recurse(index + 1);
      chosen.pop_back();
      size[a] -= size[b];
      parent[b] = b;
    }
    if (still_spans(index + 1)) recurse(index + 1);
  };
  recurse(0);
  return count;
}

std::vector<BoundCheck> bound_audit(const Graph& g, const AuditOptions& options) {
  using Status = BoundCheck::Status;
  std::vector<BoundCheck> checks;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const bool connected = n >= 2 && is_connected(g);
  const std::string mu_skip = n < 2 ? "requires n >= 2" : "requires a connected graph";

  auto exact = [&](std::string name, std::string relation, const Rational& lhs, const Rational& rhs) {
    BoundCheck c{std::move(name), std::move(relation), to_string(lhs), to_string(rhs)};
    c.status = lhs <= rhs ? Status::Holds : Status::Violated;
    c.equality = lhs == rhs;
    checks.push_back(std::move(c));
  };
  auto skipped = [&](std::string name, std::string relation, std::string note) {
    BoundCheck c{std::move(name), std::move(relation)};
    c.status = Status::Skipped;
    c.note = std::move(note);
    checks.push_back(std::move(c));
  };

  Rational mu(0);
  DistanceMatrix d;
  if (connected) {
    d = all_pairs_distances(g);
    mu = characteristic_length(g, d);
    const Rational nn(static_cast<long long>(n));
    const Rational pairs = Rational(BigInt(n) * BigInt(n - 1));
    const Rational density_term = Rational(2) - Rational(BigInt(2 * m)) / pairs;
    exact("mu_at_least_1", "1 <= mu", Rational(1), mu);
    exact("mu_at_most_path", "mu <= (n+1)/3", mu, (nn + 1) / 3);
    exact("mu_at_most_edge_density", "mu <= 2 - 2m/(n(n-1))", mu, density_term);
    exact("mu_at_least_edge_density", "2 - 2m/(n(n-1)) <= mu", density_term, mu);
    exact("mu_at_most_diameter", "mu <= diam", mu, Rational(diameter(g)));
    try {
      exact("mu_at_most_independence", "mu <= beta", mu,
            Rational(static_cast<long long>(independence_number(g, options.caps.independence))));
    } catch (const Error& e) {
      skipped("mu_at_most_independence", "mu <= beta", e.what());
    }
    const double bound = pseudoinverse_trace_bound(g);
    const double mu_d = to_double(mu);
    BoundCheck trace{"mu_at_least_trace", "2 tr(L+)/(n-1) <= mu", format_double(bound),
                     to_string(mu)};
    trace.status = bound <= mu_d + options.trace_tolerance ? Status::Holds : Status::Violated;
    trace.equality = std::abs(bound - mu_d) <= options.trace_tolerance;
    checks.push_back(std::move(trace));

    const BigInt trees = spanning_tree_count(g);
    if (trees > options.spanning_tree_cap) {
      skipped("wiener_at_most_spanning_trees", "W(G) <= W(T) for all spanning trees T",
              "spanning tree count " + trees.str() + " exceeds cap");
    } else {
      const Rational w = wiener_index(d);
      std::uint64_t min_tree = std::numeric_limits<std::uint64_t>::max();
      const auto count = for_each_spanning_tree(g, [&](const std::vector<Edge>& t) {
        min_tree = std::min(min_tree, tree_wiener_index(n, t));
      });
      BoundCheck c{"wiener_at_most_spanning_trees", "W(G) <= min_T W(T)", to_string(w),
                   std::to_string(min_tree)};
      c.status = w <= Rational(BigInt(min_tree)) ? Status::Holds : Status::Violated;
      c.equality = w == Rational(BigInt(min_tree));
      c.note = std::to_string(count) + " spanning trees";
      if (BigInt(count) != trees) {
        c.status = Status::Violated;
        c.note += " (enumeration disagrees with Kirchhoff count " + trees.str() + ")";
      }
      checks.push_back(std::move(c));
    }
  } else {
    for (const char* name : {"mu_at_least_1", "mu_at_most_path", "mu_at_most_edge_density",
                             "mu_at_least_edge_density", "mu_at_most_diameter",
                             "mu_at_most_independence", "mu_at_least_trace",
                             "wiener_at_most_spanning_trees"}) {
      skipped(name, "", mu_skip);
    }
  }

  if (m == 0) {
    // c = 1 > 0 = 2a on any edgeless graph; the bound is about graphs with edges.
    skipped("chromatic_at_most_twice_arboricity", "c <= 2a", "requires at least one edge");
    return checks;
  }
  try {
    const auto c = chromatic_number(g, options.caps.chromatic);
    const auto a = arboricity(g, options.caps.arboricity).arboricity;
    exact("chromatic_at_most_twice_arboricity", "c <= 2a",
          Rational(static_cast<long long>(c)), Rational(static_cast<long long>(2 * a)));
  } catch (const Error& e) {
    skipped("chromatic_at_most_twice_arboricity", "c <= 2a", e.what());
  }
  return checks;
}

}  // namespace netfunc
