#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <limits>
#include <string>

#include "heredenum/heredenum.hpp"

using namespace heredenum;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;

struct RunConfig {
  std::string graph_file;
  std::string class_name;
  int p = 2;
  int d = 2;
  std::string forbidden_file;
  std::string variant = "general";
  std::string mode = "delay";
  std::size_t limit = 0;
  std::string format = "plain";
  bool stats = false;
  bool diagnose_map = false;
  // Incremental mode budget: coeff * (n+1)^exp_n * (N+1)^exp_N.
  double budget_coeff = 256;
  int budget_exp_n = 4;
  int budget_exp_N = 2;
  bool strict = false;
};

BudgetFn make_budget(double coeff, int a, int b) {
  return [coeff, a, b](std::size_t n, std::size_t N) -> std::uint64_t {
    double v = coeff * std::pow(static_cast<double>(n + 1), a) *
               std::pow(static_cast<double>(N + 1), b);
    if (v >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v);
  };
}

void print_solution(const VertexSet& S, std::size_t index, const std::string& format) {
  if (format == "jsonl") {
    nlohmann::ordered_json line;
    line["solution"] = S.to_vector();
    line["index"] = index;
    std::cout << line.dump() << '\n';
  } else {
    bool first = true;
    for (Vertex v : S) {
      std::cout << (first ? "" : " ") << v;
      first = false;
    }
    std::cout << '\n';
  }
  std::cout.flush();
}

int diagnose(const ClassSpec& spec, Variant variant, const Graph& G) {
  SuccessorFn succ;
  Graph H = G;
  if (spec.kind == ClassKind::TriviallyPerfect || spec.kind == ClassKind::Interval) {
    // The maps live on the connected variant; the general one runs on G plus
    // a universal vertex.
    if (variant == Variant::General) H = universalize(spec, G).graph;
    variant = Variant::Connected;
    if (spec.kind == ClassKind::TriviallyPerfect)
      succ = [](const Graph& g, const VertexSet& W, const VertexSet& S, Vertex v,
                StepCounter& steps, std::vector<VertexSet>& out) {
        tp_successors(g, W, S, v, steps, out);
      };
    else
      succ = [](const Graph& g, const VertexSet& W, const VertexSet& S, Vertex v,
                StepCounter& steps, std::vector<VertexSet>& out) {
        interval_successors(g, W, S, v, steps, out);
      };
  } else if (has_cks_base(spec)) {
    succ = lift_successor(cks_base(spec, variant), spec, variant, G.empty_set());
  } else {
    std::cerr << "error: --diagnose-map needs a class with a delay-mode solution map\n";
    return kExitUnsupported;
  }
  SolutionMapReport r = solution_map_diagnostics(succ, spec, variant, H);
  std::cout << "nodes " << r.node_count << '\n'
            << "arcs " << r.arc_count << '\n'
            << "strongly_connected " << (r.strongly_connected ? "true" : "false") << '\n'
            << "max_out_degree " << r.max_out_degree << '\n'
            << "condensation_size " << r.condensation_size << '\n'
            << "sound " << (r.sound ? "true" : "false") << '\n';
  if (r.unsound_witness) std::cout << "unsound_witness " << r.unsound_witness->to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Enumerate maximal (connected) induced subgraphs in a hereditary class"};
  app.add_option("graph", cfg.graph_file, "Edge-list file: 'n m', then m lines 'u v'")->required();
  app.add_option("--class", cfg.class_name, "Graph class")->required();
  app.add_option("--p", cfg.p, "Number of parts for complete-p-partite")->check(CLI::PositiveNumber);
  app.add_option("--d", cfg.d, "Degree bound for degree-bounded")->check(CLI::NonNegativeNumber);
  app.add_option("--forbidden", cfg.forbidden_file,
                 "Forbidden family for finite-forbidden: edge-list blocks separated by blank lines");
  app.add_option("--variant", cfg.variant)->check(CLI::IsMember({"general", "connected"}));
  app.add_option("--mode", cfg.mode)->check(CLI::IsMember({"delay", "incremental", "oracle"}));
  app.add_option("--limit", cfg.limit, "Stop after K solutions")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"plain", "jsonl"}));
  app.add_flag("--stats", cfg.stats, "Print count, delays and wall time to stderr");
  app.add_flag("--diagnose-map", cfg.diagnose_map,
               "Check the solution map against the brute-force oracle instead of enumerating");
  app.add_option("--budget-coeff", cfg.budget_coeff, "Incremental budget coefficient");
  app.add_option("--budget-exp-n", cfg.budget_exp_n, "Incremental budget exponent of n+1");
  app.add_option("--budget-exp-N", cfg.budget_exp_N, "Incremental budget exponent of N+1");
  app.add_flag("--strict", cfg.strict, "Fail when the total solver misses its budget");
  app.footer(
      "Classes: edgeless cluster clique complete-p-partite complete-bipartite split\n"
      "complete-split pseudo-split threshold degree-bounded trivially-perfect interval\n"
      "chordal unit-interval block 3-leaf-power basic-4-leaf-power wheel-free forest\n"
      "finite-forbidden\n\n"
      "Exit codes: 2 unreadable or malformed input, 3 unsupported class/mode.\n"
      "HEREDENUM_SEED is reserved; the build has no randomness.");
  CLI11_PARSE(app, argc, argv);

  std::optional<ClassKind> kind = parse_class_kind(cfg.class_name);
  if (!kind) {
    std::cerr << "error: unknown class '" << cfg.class_name << "'\n";
    return kExitUnsupported;
  }

  Graph G;
  try {
    G = io::read_graph_file(cfg.graph_file);
  } catch (const ParseError& e) {
    std::cerr << cfg.graph_file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  ClassSpec spec;
  try {
    switch (*kind) {
      case ClassKind::CompletePPartite:
        spec = ClassSpec::complete_p_partite(cfg.p);
        break;
      case ClassKind::DegreeBounded:
        spec = ClassSpec::degree_bounded(cfg.d);
        break;
      case ClassKind::FiniteForbidden:
        if (cfg.forbidden_file.empty()) {
          std::cerr << "error: finite-forbidden needs --forbidden FILE\n";
          return kExitUnsupported;
        }
        spec = ClassSpec::finite_forbidden(io::read_family_file(cfg.forbidden_file));
        break;
      default:
        spec = ClassSpec::of(*kind);
    }
  } catch (const ParseError& e) {
    std::cerr << cfg.forbidden_file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  Variant variant = cfg.variant == "connected" ? Variant::Connected : Variant::General;
  Mode mode = *parse_mode(cfg.mode);

  try {
    if (cfg.diagnose_map) return diagnose(spec, variant, G);
    EnumerateOptions opts;
    if (cfg.limit > 0) opts.limit = cfg.limit;
    opts.next.budget = make_budget(cfg.budget_coeff, cfg.budget_exp_n, cfg.budget_exp_N);
    opts.next.strict = cfg.strict;
    auto e = enumerate(spec, variant, std::make_shared<const Graph>(std::move(G)), mode, opts);
    std::size_t index = 0;
    while (auto s = e->next()) print_solution(*s, index++, cfg.format);
    if (cfg.stats) {
      const EnumStats& st = e->stats();
      std::cerr << "count " << st.emitted << '\n'
                << "steps " << st.steps << '\n'
                << "max_delay_steps " << st.max_delay << '\n'
                << "mean_delay_steps " << st.mean_delay << '\n'
                << "wall_seconds " << st.wall_seconds << '\n';
      if (mode == Mode::Incremental) std::cerr << "budget_misses " << st.budget_misses << '\n';
    }
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
