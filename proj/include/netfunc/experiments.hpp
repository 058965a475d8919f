#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netfunc/combinatorial.hpp"
#include "netfunc/generators.hpp"
#include "netfunc/graph.hpp"
#include "netfunc/numeric.hpp"

namespace netfunc {

// ---------------------------------------------------------------------------
// Extremal enumeration over all connected labeled graphs of a given order.

enum class ExtremalFunctional { CharacteristicLength, EulerCharacteristic, HilbertAction, LogComplexity };

std::string to_string(ExtremalFunctional f);
/// "mu", "chi", "eta", "logxi".
ExtremalFunctional parse_extremal_functional(const std::string& name);

inline constexpr std::size_t kHistogramBins = 64;
inline constexpr std::size_t kMaxExtremalOrder = 7;

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;
};

struct ExtremalResult {
  ExtremalFunctional functional{};
  double min_value = 0.0;
  double max_value = 0.0;
  std::string min_exact;   // exact form where one exists (rational mu, integer chi)
  std::string max_exact;
  Graph argmin;
  Graph argmax;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;   // graphs where the functional is undefined (eta)
  Histogram histogram;
};

struct ExtremalSearch {
  std::size_t n = 0;
  std::uint64_t labeled_graphs = 0;
  std::uint64_t connected_graphs = 0;
  std::vector<ExtremalResult> results;
};

/// Streams all 2^C(n,2) labeled graphs (n <= 7), keeps the connected ones,
/// and tracks min/max/histogram of each functional. The first graph in
/// edge-mask order wins ties, independent of `workers`.
ExtremalSearch extremal_search(std::size_t n, const std::vector<ExtremalFunctional>& functionals,
                               unsigned workers = 1);

/// Evaluates a functional on an arbitrary graph through the general-purpose
/// modules (used to re-check extremal witnesses). nullopt when undefined.
std::optional<double> evaluate_extremal_functional(ExtremalFunctional f, const Graph& g);

/// Graph whose edge set is the bit mask over pairs (u<v) in lexicographic order.
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

void write_histogram_csv(std::ostream& out, const ExtremalSearch& search);

// ---------------------------------------------------------------------------
// lambda / inductive-dimension sweep on G(n, p).

struct LambdaDimensionRow {
  double p = 0.0;
  double mean_lambda = 0.0;
  double mean_dimension = 0.0;
  std::size_t samples = 0;
  std::size_t lambda_excluded = 0;
};

struct LambdaDimensionSweep {
  std::vector<LambdaDimensionRow> rows;
  /// Pearson correlation of (mean_lambda, mean_dimension) over rows with at
  /// least one defined lambda; nullopt with fewer than two such rows.
  std::optional<double> pearson;
};

LambdaDimensionSweep lambda_dimension_sweep(std::size_t n, const std::vector<double>& p_grid,
                                            std::size_t samples_per_p, std::uint64_t seed,
                                            unsigned workers = 1);

std::optional<double> pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Growth sweeps.

/// One analysed graph. Optional fields are empty exactly when their
/// `<field>_flag` is non-empty.
struct SweepRecord {
  std::string model;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double mu = 0.0;
  double nu = 0.0;
  std::optional<double> lambda;
  std::string lambda_flag;
  std::optional<double> iota;
  std::string iota_flag;
  double delta = 0.0;
  double epsilon = 0.0;
  std::optional<double> eta;
  std::string eta_flag;
  std::optional<std::int64_t> chi;
  std::string chi_flag;
  std::optional<double> formula54;
  std::string formula54_flag;
};

SweepRecord make_sweep_record(const ModelSpec& spec);

/// Records for every (n, seed index) with spec.seed = base.seed + index.
std::vector<SweepRecord> growth_sweep(const ModelSpec& base, const std::vector<std::size_t>& n_list,
                                      std::size_t seeds_per_n, unsigned workers = 1);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::string sweep_to_json(const std::vector<SweepRecord>& records);

// ---------------------------------------------------------------------------
// Bound audit.

struct BoundCheck {
  enum class Status { Holds, Violated, Skipped };
  std::string name;
  std::string relation;   // human-readable "lhs <= rhs"
  std::string lhs;        // exact where possible
  std::string rhs;
  Status status = Status::Skipped;
  bool equality = false;
  std::string note;
};

std::string to_string(BoundCheck::Status status);

struct AuditOptions {
  ExactCaps caps;
  /// Spanning trees enumerated for W(G) <= W(T); above this the check is skipped.
  std::uint64_t spanning_tree_cap = 1'000'000;
  double trace_tolerance = 1e-9;
};

/// Evaluates every implemented bound on g. Each check is lhs <= rhs.
std::vector<BoundCheck> bound_audit(const Graph& g, const AuditOptions& options = {});

/// Calls fn on the edge list of every spanning tree; returns the count.
std::uint64_t for_each_spanning_tree(const Graph& g,
                                     const std::function<void(const std::vector<Edge>&)>& fn);

/// Wiener index of a tree from subtree sizes: 2 * sum_e s (n - s).
std::uint64_t tree_wiener_index(std::size_t n, const std::vector<Edge>& tree_edges);

}  // namespace netfunc
