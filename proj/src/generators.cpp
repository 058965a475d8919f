#include "netfunc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "netfunc/error.hpp"
#include "netfunc/rng.hpp"

namespace netfunc {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidParam, message);
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    invalid("bad integer for " + key + ": '" + text + "'");
  }
  return value;
}

std::int64_t parse_i64(const std::string& key, const std::string& text) {
  std::int64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    invalid("bad integer for " + key + ": '" + text + "'");
  }
  return value;
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    invalid("bad number for " + key + ": '" + text + "'");
  }
  return value;
}

// Permutation maps without an explicit seed draw from this substream of the
// model seed, keyed by the generator's position.
std::uint64_t permutation_seed(const OrbitalMap& map, std::uint64_t model_seed, std::size_t index) {
  if (map.seed) return *map.seed;
  return Rng(model_seed, 0x6f72626974ULL).split(index).next();
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Complete: return "complete";
    case ModelKind::Cycle: return "cycle";
    case ModelKind::Path: return "path";
    case ModelKind::Star: return "star";
    case ModelKind::Wheel: return "wheel";
    case ModelKind::CompleteBipartite: return "complete_bipartite";
    case ModelKind::ErdosRenyi: return "er";
    case ModelKind::WattsStrogatz: return "ws";
    case ModelKind::BarabasiAlbert: return "ba";
    case ModelKind::Orbital: return "orbital";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
  static const std::map<std::string, ModelKind> kinds = {
      {"complete", ModelKind::Complete},
      {"cycle", ModelKind::Cycle},
      {"path", ModelKind::Path},
      {"line", ModelKind::Path},
      {"star", ModelKind::Star},
      {"wheel", ModelKind::Wheel},
      {"complete_bipartite", ModelKind::CompleteBipartite},
      {"bipartite", ModelKind::CompleteBipartite},
      {"er", ModelKind::ErdosRenyi},
      {"erdos_renyi", ModelKind::ErdosRenyi},
      {"ws", ModelKind::WattsStrogatz},
      {"watts_strogatz", ModelKind::WattsStrogatz},
      {"ba", ModelKind::BarabasiAlbert},
      {"barabasi_albert", ModelKind::BarabasiAlbert},
      {"orbital", ModelKind::Orbital},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) invalid("unknown model '" + name + "'");
  return it->second;
}

std::string to_string(const OrbitalMap& map) {
  if (map.kind == OrbitalMap::Kind::Quadratic) return "quad:" + std::to_string(map.constant);
  return map.seed ? "perm:" + std::to_string(*map.seed) : std::string("perm");
}

OrbitalMap parse_orbital_map(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  OrbitalMap map;
  if (head == "quad" || head == "quadratic") {
    if (arg.empty()) invalid("quadratic generator needs a constant: quad:<c>");
    map.kind = OrbitalMap::Kind::Quadratic;
    map.constant = parse_i64("quad", arg);
  } else if (head == "perm" || head == "permutation") {
    map.kind = OrbitalMap::Kind::Permutation;
    if (!arg.empty()) map.seed = parse_u64("perm", arg);
  } else {
    invalid("unknown orbital generator '" + text + "'");
  }
  return map;
}

void validate(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::Complete:
    case ModelKind::Path:
      if (spec.n < 1) invalid(to_string(spec.kind) + " requires n >= 1");
      break;
    case ModelKind::Cycle:
      if (spec.n < 3) invalid("cycle requires n >= 3");
      break;
    case ModelKind::Star:
      break;
    case ModelKind::Wheel:
      if (spec.n < 3) invalid("wheel requires n >= 3 rim vertices");
      break;
    case ModelKind::CompleteBipartite:
      if (spec.a < 1 || spec.b < 1) invalid("complete_bipartite requires a, b >= 1");
      break;
    case ModelKind::ErdosRenyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) invalid("er requires 0 <= p <= 1");
      break;
    case ModelKind::WattsStrogatz:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) invalid("ws requires 0 <= p <= 1");
      if (spec.k % 2 != 0) invalid("ws requires even k");
      if (spec.k >= spec.n) invalid("ws requires k < n");
      break;
    case ModelKind::BarabasiAlbert:
      if (spec.m < 1 || spec.m >= spec.n) invalid("ba requires 1 <= m < n");
      break;
    case ModelKind::Orbital:
      if (spec.n < 2) invalid("orbital requires n >= 2");
      if (spec.generators.empty()) invalid("orbital requires at least one generator");
      break;
  }
}

std::string to_string(const ModelSpec& spec) {
  std::ostringstream out;
  out << "model=" << to_string(spec.kind);
  switch (spec.kind) {
    case ModelKind::CompleteBipartite:
      out << " a=" << spec.a << " b=" << spec.b;
      break;
    case ModelKind::ErdosRenyi:
      out << " n=" << spec.n << " p=" << format_double(spec.p);
      break;
    case ModelKind::WattsStrogatz:
      out << " n=" << spec.n << " k=" << spec.k << " p=" << format_double(spec.p);
      break;
    case ModelKind::BarabasiAlbert:
      out << " n=" << spec.n << " m=" << spec.m;
      break;
    case ModelKind::Orbital: {
      out << " n=" << spec.n << " generators=";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        out << (i ? "," : "") << to_string(spec.generators[i]);
      }
      break;
    }
    default:
      out << " n=" << spec.n;
  }
  out << " seed=" << spec.seed;
  return out.str();
}

ModelSpec parse_model_spec(const std::string& text) {
  std::istringstream tokens(text);
  std::string token;
  ModelSpec spec;
  bool have_model = false;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) invalid("expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "model") {
      spec.kind = parse_model_kind(value);
      have_model = true;
    } else if (key == "n") {
      spec.n = parse_u64(key, value);
    } else if (key == "a") {
      spec.a = parse_u64(key, value);
    } else if (key == "b") {
      spec.b = parse_u64(key, value);
    } else if (key == "k") {
      spec.k = parse_u64(key, value);
    } else if (key == "m") {
      spec.m = parse_u64(key, value);
    } else if (key == "p") {
      spec.p = parse_double(key, value);
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else if (key == "generators") {
      std::istringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ',')) spec.generators.push_back(parse_orbital_map(part));
    } else {
      invalid("unknown model parameter '" + key + "'");
    }
  }
  if (!have_model) invalid("missing model=<kind>");
  return spec;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) invalid("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph wheel_graph(std::size_t rim) {
  if (rim < 3) invalid("wheel requires n >= 3 rim vertices");
  std::vector<Edge> edges;
  const auto hub = static_cast<Vertex>(rim);
  for (Vertex u = 0; u < rim; ++u) {
    edges.emplace_back(u, static_cast<Vertex>((u + 1) % rim));
    edges.emplace_back(u, hub);
  }
  return Graph::from_edge_list(rim + 1, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edge_list(a + b, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) invalid("er requires 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  validate(ModelSpec{.kind = ModelKind::WattsStrogatz, .n = n, .k = k, .p = p});
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      const auto v = static_cast<Vertex>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }
  // Lattice edges (u, u+j) are visited j-major, u-minor; each consumes one
  // uniform draw, and a rewire draws endpoints until one is admissible.
  Rng rng(seed);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (Vertex u = 0; u < n; ++u) {
      const auto v = static_cast<Vertex>((u + j) % n);
      if (rng.uniform() >= p) continue;
      if (!adj[u].count(v)) continue;
      if (adj[u].size() >= n - 1) continue;
      Vertex w;
      do {
        w = static_cast<Vertex>(rng.below(n));
      } while (w == u || adj[u].count(w));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) invalid("ba requires 1 <= m < n");
  std::vector<Edge> edges;
  // Each vertex appears once per incident edge, so a uniform pick is
  // degree-proportional.
  std::vector<Vertex> endpoints;
  for (Vertex u = 0; u <= m; ++u) {
    for (Vertex v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  Rng rng(seed);
  for (auto v = static_cast<Vertex>(m + 1); v < n; ++v) {
    std::vector<Vertex> targets;
    while (targets.size() < m) {
      const Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph orbital(std::size_t n, const std::vector<OrbitalMap>& generators, std::uint64_t seed) {
  if (n < 2) invalid("orbital requires n >= 2");
  std::vector<Edge> edges;
  const auto modulus = static_cast<std::int64_t>(n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& map = generators[g];
    std::vector<Vertex> image(n);
    if (map.kind == OrbitalMap::Kind::Quadratic) {
      const std::int64_t c = ((map.constant % modulus) + modulus) % modulus;
      for (std::int64_t x = 0; x < modulus; ++x) {
        const auto sq = static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x)) %
            static_cast<unsigned __int128>(modulus));
        image[x] = static_cast<Vertex>((sq + c) % modulus);
      }
    } else {
      std::iota(image.begin(), image.end(), Vertex{0});
      Rng rng(permutation_seed(map, seed, g));
      for (std::size_t i = n - 1; i > 0; --i) std::swap(image[i], image[rng.below(i + 1)]);
    }
    for (Vertex x = 0; x < n; ++x) {
      if (image[x] != x) edges.emplace_back(x, image[x]);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph make_family(const ModelSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ModelKind::Complete: return complete_graph(spec.n);
    case ModelKind::Cycle: return cycle_graph(spec.n);
    case ModelKind::Path: return path_graph(spec.n);
    case ModelKind::Star: return star_graph(spec.n);
    case ModelKind::Wheel: return wheel_graph(spec.n);
    case ModelKind::CompleteBipartite: return complete_bipartite_graph(spec.a, spec.b);
    default: invalid(to_string(spec.kind) + " is a random model, not a family");
  }
}

Graph make_graph(const ModelSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ModelKind::ErdosRenyi: return erdos_renyi(spec.n, spec.p, spec.seed);
    case ModelKind::WattsStrogatz: return watts_strogatz(spec.n, spec.k, spec.p, spec.seed);
    case ModelKind::BarabasiAlbert: return barabasi_albert(spec.n, spec.m, spec.seed);
    case ModelKind::Orbital: return orbital(spec.n, spec.generators, spec.seed);
    default: return make_family(spec);
  }
}

}  // namespace netfunc
