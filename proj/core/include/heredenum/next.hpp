#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// All maximal (connected) P sets of G[W]. Must charge its work to `steps`
// and stop when the counter throws BudgetExhausted.
using TotalSolver =
    std::function<std::vector<VertexSet>(const Graph& G, const VertexSet& W, StepCounter& steps)>;

// Step budget p(n, N) of a total solver on n vertices with N solutions.
using BudgetFn = std::function<std::uint64_t(std::size_t n, std::size_t N)>;

// 256 (n+1)^4 (N+1)^2, saturating.
BudgetFn default_budget();

struct NextOptions {
  BudgetFn budget = default_budget();
  // When the final search finds nothing new the solver broke its budget.
  // Strict mode throws ContractViolation; otherwise a full unbounded run
  // recovers and the miss is reported.
  bool strict = false;
};

struct NextResult {
  std::optional<VertexSet> solution;  // nullopt means completed
  bool budget_miss = false;
};

// One call of the NEXT procedure: a solution of G outside `known`, or
// completed. `known` must hold genuine solutions only.
NextResult next_solution(const ClassSpec& spec, Variant variant, const Graph& G,
                         const std::vector<VertexSet>& known, const TotalSolver& solver,
                         const NextOptions& options, StepCounter& steps);

// Calls next_solution until it reports completion.
std::unique_ptr<Enumerator> incremental_enumerator(const ClassSpec& spec, Variant variant,
                                                   std::shared_ptr<const Graph> G,
                                                   TotalSolver solver, NextOptions options = {},
                                                   std::optional<std::size_t> limit = std::nullopt);

}  // namespace heredenum
