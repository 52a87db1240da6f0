#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// Solves the level-t restricted problem: all maximal (connected) P sets of
// G[W], given |Z| = level and Z ⊆ W contained in every forbidden set of G[W].
// The variant is fixed when the solver is built.
struct RestrictedSolver {
  using Solve = std::function<std::vector<VertexSet>(const Graph& G, const VertexSet& W,
                                                     const VertexSet& Z, StepCounter& steps)>;
  std::size_t level = 0;
  Solve solve;
};

// Level t solver from a level t+1 solver. The connected variant is only
// lifted from level 1 to level 0: above level 0 its traversal can miss the
// solutions containing Z (see connected_from_general). Handles the trivial cases (G[W] in
// the class, Z forbidden, Z maximal), then the solutions missing part of Z,
// then traverses the solution map whose successors come from the inner solver
// on (G[S ∪ {v}], Z ∪ {v}).
RestrictedSolver lift_restricted(RestrictedSolver inner, ClassSpec spec, Variant variant);

// Applies lift_restricted until the level is `level`.
RestrictedSolver lift_to(RestrictedSolver solver, std::size_t level, const ClassSpec& spec,
                         Variant variant);

// Connected solver at the same level: the not-Z solutions plus, for each
// general solution T ⊇ Z whose Z lies in one component, that component when
// it is a maximal connected P set. A maximal connected P set C ⊇ Z is a
// component of any general extension of C, since no neighbor of C can join.
RestrictedSolver connected_from_general(RestrictedSolver general, ClassSpec spec);

// The stack from a general base solver down to `level` for either variant;
// connected stacks go through connected_from_general at max(level, 1).
RestrictedSolver lift_stack(RestrictedSolver general, std::size_t level, const ClassSpec& spec,
                            Variant variant);

// Level-0 lift of a level-1 solver as a lazy stream over all of G.
std::unique_ptr<Enumerator> lifted_enumerator(RestrictedSolver level1, const ClassSpec& spec,
                                              Variant variant, std::shared_ptr<const Graph> G,
                                              std::optional<std::size_t> limit = std::nullopt);

// The successor function used by the lift at restriction set Z. Exposed for
// diagnostics.
SuccessorFn lift_successor(RestrictedSolver inner, ClassSpec spec, Variant variant, VertexSet Z);

}  // namespace heredenum
