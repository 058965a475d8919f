#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netfunc/graph.hpp"

namespace netfunc {

enum class ModelKind {
  Complete,
  Cycle,
  Path,
  Star,
  Wheel,
  CompleteBipartite,
  ErdosRenyi,
  WattsStrogatz,
  BarabasiAlbert,
  Orbital,
};

std::string to_string(ModelKind kind);
/// Accepts the canonical names plus the short CLI aliases (er, ws, ba).
ModelKind parse_model_kind(const std::string& name);

/// One generator map of an orbital network on Z_n.
struct OrbitalMap {
  enum class Kind { Quadratic, Permutation };
  Kind kind = Kind::Quadratic;
  std::int64_t constant = 0;           // c in x^2 + c (quadratic)
  std::optional<std::uint64_t> seed;   // permutation seed; derived from the model seed if absent

  friend bool operator==(const OrbitalMap&, const OrbitalMap&) = default;
};

/// Declarative description of a graph family or random model.
///
/// `n` is the vertex count except for stars and wheels, where it is the
/// number of leaves / rim vertices (one extra center vertex is added).
struct ModelSpec {
  ModelKind kind = ModelKind::Complete;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::vector<OrbitalMap> generators;
  std::uint64_t seed = 0;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// Throws Error(InvalidParam) when the parameters do not fit the kind.
void validate(const ModelSpec& spec);

/// Flat "model=er n=50 p=0.1 seed=42" form; only the parameters the kind uses.
std::string to_string(const ModelSpec& spec);
ModelSpec parse_model_spec(const std::string& text);

std::string to_string(const OrbitalMap& map);
/// "quad:<c>" or "perm" / "perm:<seed>".
OrbitalMap parse_orbital_map(const std::string& text);

/// Any kind, deterministic in (spec, seed).
Graph make_graph(const ModelSpec& spec);

/// Deterministic families only (complete, cycle, path, star, wheel, K_{a,b}).
Graph make_family(const ModelSpec& spec);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Center 0 joined to `leaves` leaves.
Graph star_graph(std::size_t leaves);
/// Rim cycle 0..rim-1 plus hub `rim`.
Graph wheel_graph(std::size_t rim);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);
Graph orbital(std::size_t n, const std::vector<OrbitalMap>& generators, std::uint64_t seed);

}  // namespace netfunc
