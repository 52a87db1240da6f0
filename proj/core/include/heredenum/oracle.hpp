#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"

namespace heredenum {

inline constexpr std::size_t kOracleMaxOrder = 20;

// All maximal (connected) P sets of G[W] by scanning every subset of W,
// sorted by lex_less. Throws UnsupportedError when |W| exceeds max_order.
std::vector<VertexSet> brute_force_enumerate(const ClassSpec& spec, Variant variant,
                                             const Graph& G, const VertexSet& W,
                                             std::size_t max_order = kOracleMaxOrder);
std::vector<VertexSet> brute_force_enumerate(const ClassSpec& spec, Variant variant,
                                             const Graph& G,
                                             std::size_t max_order = kOracleMaxOrder);

struct SolutionMapReport {
  std::size_t node_count = 0;
  std::size_t arc_count = 0;
  bool strongly_connected = false;
  std::size_t max_out_degree = 0;  // distinct successors of one solution
  std::size_t condensation_size = 0;
  bool sound = true;
  std::optional<VertexSet> unsound_witness;
};

// Builds the solution map over the oracle's solutions, with an arc S -> T for
// each T in succ(S, v), v ranging over V \ S (general) or N(S) (connected).
SolutionMapReport solution_map_diagnostics(const SuccessorFn& succ, const ClassSpec& spec,
                                           Variant variant, const Graph& G);

}  // namespace heredenum
