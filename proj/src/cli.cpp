#include "netfunc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "netfunc/continuum.hpp"
#include "netfunc/error.hpp"
#include "netfunc/experiments.hpp"
#include "netfunc/generators.hpp"
#include "netfunc/graph_io.hpp"
#include "netfunc/parallel.hpp"
#include "netfunc/report.hpp"

namespace netfunc {

unsigned default_workers() {
  if (const char* env = std::getenv("NETFUNC_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned workers = 0;
  std::string format;
  bool strict = false;
  std::size_t max_exact_n = 0;
};

struct ModelFlags {
  std::string model;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::vector<std::string> generators;

  void add_to(CLI::App* cmd, bool with_n) {
    cmd->add_option("--model", model, "complete|cycle|path|star|wheel|complete_bipartite|er|ws|ba|orbital")
        ->required();
    if (with_n) cmd->add_option("--n", n, "vertex count (leaves/rim for star and wheel)");
    cmd->add_option("--a", a, "first part size (complete_bipartite)");
    cmd->add_option("--b", b, "second part size (complete_bipartite)");
    cmd->add_option("--k", k, "ring degree (ws)");
    cmd->add_option("--m", m, "edges per new vertex (ba)");
    cmd->add_option("--p", p, "edge / rewiring probability");
    cmd->add_option("--generators", generators, "orbital maps: quad:<c>, perm, perm:<seed>")
        ->delimiter(',');
  }

  ModelSpec to_spec(std::uint64_t seed) const {
    ModelSpec spec;
    spec.kind = parse_model_kind(model);
    spec.n = n;
    spec.a = a;
    spec.b = b;
    spec.k = k;
    spec.m = m;
    spec.p = p;
    spec.seed = seed;
    for (const auto& g : generators) spec.generators.push_back(parse_orbital_map(g));
    return spec;
  }
};

ExactCaps caps_from(const GlobalOptions& g) {
  ExactCaps caps;
  if (g.max_exact_n > 0) caps.independence = caps.chromatic = caps.arboricity = g.max_exact_n;
  return caps;
}

unsigned workers_from(const GlobalOptions& g) { return g.workers > 0 ? g.workers : default_workers(); }

std::string format_from(const GlobalOptions& g, const char* fallback) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "json" && f != "csv") throw Error(ErrorCode::InvalidParam, "--format must be json or csv");
  return f;
}

// Writes to the named file, or to `out` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidParam, "cannot open '" + path + "' for writing");
  fn(file);
}

std::string edges_string(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kExitParseError;
    case ErrorCode::UnknownFunctional: return kExitUnknownFunctional;
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::CliqueBudgetExceeded:
    case ErrorCode::RecursionBudgetExceeded: return kExitCapExceeded;
    default: return kExitFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph functionals: compute, cross-check, experiment."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "base random seed")->each([&](const std::string&) {
    global.seed_set = true;
  });
  app.add_option("--workers", global.workers, "worker threads (default: NETFUNC_WORKERS or 1)");
  app.add_option("--format", global.format, "json or csv");
  app.add_flag("--strict", global.strict, "fail (exit 3) instead of skipping capped functionals");
  app.add_option("--max-exact-n", global.max_exact_n, "vertex cap for beta / chromatic / arboricity");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "report functionals of an edge-list file");
  std::string analyze_input;
  std::vector<std::string> analyze_functionals;
  bool analyze_profile = false;
  std::string analyze_out;
  analyze_cmd->add_option("input", analyze_input, "edge-list file ('-' for stdin)")->required();
  analyze_cmd->add_option("--functionals,-f", analyze_functionals, "names or 'all' (default all)")
      ->delimiter(',');
  analyze_cmd->add_flag("--profile", analyze_profile, "include the per-vertex profile (JSON only)");
  analyze_cmd->add_option("--out,-o", analyze_out, "output file (default stdout)");

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "write a seeded model graph as an edge list");
  ModelFlags generate_flags;
  generate_flags.add_to(generate_cmd, true);
  std::string generate_out;
  generate_cmd->add_option("--out,-o", generate_out, "output file (default stdout)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "growth sweep or lambda/dimension sweep");
  ModelFlags sweep_flags;
  sweep_flags.add_to(sweep_cmd, false);
  std::vector<std::size_t> sweep_n;
  std::size_t sweep_seeds = 1;
  bool sweep_lambda_dimension = false;
  std::vector<double> sweep_p_grid;
  std::size_t sweep_samples = 50;
  std::string sweep_out;
  sweep_cmd->add_option("--n", sweep_n, "comma-separated orders")->delimiter(',')->required();
  sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per order (growth sweep)");
  sweep_cmd->add_flag("--lambda-dimension", sweep_lambda_dimension,
                      "G(n,p) lambda vs dimension sweep over --p-grid (er only, single n)");
  sweep_cmd->add_option("--p-grid", sweep_p_grid, "comma-separated p values")->delimiter(',');
  sweep_cmd->add_option("--samples", sweep_samples, "samples per p (lambda/dimension sweep)");
  sweep_cmd->add_option("--out,-o", sweep_out, "output file (default stdout)");

  // extremal
  auto* extremal_cmd = app.add_subcommand("extremal", "exhaustive search over connected graphs");
  std::size_t extremal_n = 0;
  std::vector<std::string> extremal_functionals;
  std::string extremal_out;
  extremal_cmd->add_option("--n", extremal_n, "order (<= 7)")->required();
  extremal_cmd->add_option("--functional", extremal_functionals, "mu, chi, eta, logxi")
      ->delimiter(',')
      ->required();
  extremal_cmd->add_option("--out,-o", extremal_out, "output file (default stdout)");

  // continuum
  auto* continuum_cmd = app.add_subcommand("continuum", "Monte-Carlo estimates on continuum spaces");
  std::string continuum_space = "torus2";
  std::string continuum_quantity = "length";
  double continuum_side = 1.0;
  double continuum_radius = 0.01;
  std::uint64_t continuum_samples = 1'000'000;
  continuum_cmd->add_option("--space", continuum_space, "torus2, torus3, sphere");
  continuum_cmd->add_option("--quantity", continuum_quantity,
                            "length (mean distance / side), sphere (sphere mean / r), "
                            "cluster (2 - sphere mean / r), lambda");
  continuum_cmd->add_option("--side", continuum_side, "torus side length");
  continuum_cmd->add_option("--radius", continuum_radius, "metric-sphere radius");
  continuum_cmd->add_option("--samples", continuum_samples, "sample count");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "check the implemented bounds on an edge-list file");
  std::string audit_input;
  std::uint64_t audit_tree_cap = AuditOptions{}.spanning_tree_cap;
  audit_cmd->add_option("input", audit_input, "edge-list file ('-' for stdin)")->required();
  audit_cmd->add_option("--spanning-tree-cap", audit_tree_cap, "max spanning trees to enumerate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  auto load = [](const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
  };

  try {
    const unsigned workers = workers_from(global);

    if (analyze_cmd->parsed()) {
      const std::string format = format_from(global, "json");
      const auto names = resolve_functionals(analyze_functionals);
      const Graph g = load(analyze_input);
      AnalyzeOptions options;
      options.caps = caps_from(global);
      options.strict = global.strict;
      options.include_profile = analyze_profile;
      const auto report = analyze(g, names, options);
      emit(analyze_out, out, [&](std::ostream& o) {
        if (format == "json") o << to_json(report).dump(2) << "\n";
        else o << to_csv(report);
      });
      return kExitOk;
    }

    if (generate_cmd->parsed()) {
      const ModelSpec spec = generate_flags.to_spec(global.seed);
      validate(spec);
      const Graph g = make_graph(spec);
      const std::string text = to_string(spec);
      emit(generate_out, out, [&](std::ostream& o) { write_edge_list(o, g, text); });
      (generate_out.empty() || generate_out == "-" ? err : out)
          << text << " vertices=" << g.order() << " edges=" << g.size() << "\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const std::string format = format_from(global, "csv");
      if (sweep_lambda_dimension) {
        if (sweep_n.size() != 1) throw Error(ErrorCode::InvalidParam, "--lambda-dimension takes one --n");
        if (sweep_p_grid.empty()) throw Error(ErrorCode::InvalidParam, "--lambda-dimension needs --p-grid");
        const auto result = lambda_dimension_sweep(sweep_n[0], sweep_p_grid, sweep_samples, global.seed, workers);
        emit(sweep_out, out, [&](std::ostream& o) {
          if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : result.rows) {
              rows.push_back({{"p", r.p},
                              {"mean_lambda", r.mean_lambda},
                              {"mean_dimension", r.mean_dimension},
                              {"samples", r.samples},
                              {"lambda_excluded", r.lambda_excluded}});
            }
            nlohmann::json j = {{"rows", rows}};
            j["pearson"] = result.pearson ? nlohmann::json(*result.pearson) : nlohmann::json();
            o << j.dump(2) << "\n";
          } else {
            o << "p,mean_lambda,mean_dimension,samples,lambda_excluded\n";
            o.precision(17);
            for (const auto& r : result.rows) {
              o << r.p << ',' << r.mean_lambda << ',' << r.mean_dimension << ',' << r.samples << ','
                << r.lambda_excluded << '\n';
            }
            o << "# pearson=" << (result.pearson ? std::to_string(*result.pearson) : "undefined") << "\n";
          }
        });
        return kExitOk;
      }
      ModelSpec base = sweep_flags.to_spec(global.seed);
      base.n = sweep_n.front();
      const auto records = growth_sweep(base, sweep_n, sweep_seeds, workers);
      emit(sweep_out, out, [&](std::ostream& o) {
        if (format == "json") o << sweep_to_json(records) << "\n";
        else write_sweep_csv(o, records);
      });
      return kExitOk;
    }

    if (extremal_cmd->parsed()) {
      const std::string format = format_from(global, "csv");
      std::vector<ExtremalFunctional> fs;
      for (const auto& name : extremal_functionals) fs.push_back(parse_extremal_functional(name));
      const auto search = extremal_search(extremal_n, fs, workers);
      emit(extremal_out, out, [&](std::ostream& o) {
        if (format == "json") {
          o << to_json(search).dump(2) << "\n";
          return;
        }
        o << "functional,n,connected_graphs,min,max,min_exact,max_exact,argmin_edges,argmax_edges\n";
        o.precision(17);
        for (const auto& r : search.results) {
          o << to_string(r.functional) << ',' << search.n << ',' << search.connected_graphs << ','
            << r.min_value << ',' << r.max_value << ',' << r.min_exact << ',' << r.max_exact << ",\""
            << edges_string(r.argmin) << "\",\"" << edges_string(r.argmax) << "\"\n";
        }
        o << "\n";
        write_histogram_csv(o, search);
      });
      return kExitOk;
    }

    if (continuum_cmd->parsed()) {
      const auto space = parse_continuum_space(continuum_space, continuum_side);
      MonteCarloEstimate est;
      if (continuum_quantity == "length") {
        est = mc_characteristic_length(space, continuum_samples, global.seed, workers);
        est.estimate /= space.side();
        est.std_error /= space.side();
      } else if (continuum_quantity == "sphere") {
        est = mc_sphere_length(space, continuum_radius, continuum_samples, global.seed, workers);
      } else if (continuum_quantity == "cluster") {
        est = mc_mean_cluster(space, continuum_radius, continuum_samples, global.seed, workers);
      } else if (continuum_quantity == "lambda") {
        const auto r = continuum_lambda(space, continuum_radius, continuum_samples, global.seed, workers);
        nlohmann::json j = {{"estimate", r.lambda},
                            {"length", {{"estimate", r.length.estimate},
                                        {"std_error", r.length.std_error},
                                        {"samples", r.length.samples}}},
                            {"cluster", {{"estimate", r.cluster.estimate},
                                         {"std_error", r.cluster.std_error},
                                         {"samples", r.cluster.samples}}}};
        out << j.dump(2) << "\n";
        return kExitOk;
      } else {
        throw Error(ErrorCode::InvalidParam, "unknown --quantity '" + continuum_quantity + "'");
      }
      nlohmann::json j = {{"estimate", est.estimate}, {"std_error", est.std_error}, {"samples", est.samples}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (audit_cmd->parsed()) {
      const std::string format = format_from(global, "json");
      const Graph g = load(audit_input);
      AuditOptions options;
      options.caps = caps_from(global);
      options.spanning_tree_cap = audit_tree_cap;
      const auto checks = bound_audit(g, options);
      if (format == "json") {
        out << to_json(checks).dump(2) << "\n";
      } else {
        out << "name,relation,lhs,rhs,status,equality,note\n";
        for (const auto& c : checks) {
          out << c.name << ",\"" << c.relation << "\"," << c.lhs << ',' << c.rhs << ','
              << to_string(c.status) << ',' << (c.equality ? "true" : "false") << ",\"" << c.note << "\"\n";
        }
      }
      bool violated = false;
      for (const auto& c : checks) violated |= c.status == BoundCheck::Status::Violated;
      return violated ? kExitFailure : kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace netfunc
