#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// One subset S' of S produced by the interval successor rules. Clique
// indices count from 1; 0 and l+1 are the empty end cliques.
struct IntervalCandidate {
  int rule = 1;  // 1, 2 or 3
  int a = 0;
  int b = 1;
  VertexSet set;
};

// The l+1+l(l-1) candidates for succ(S, v), l the number of maximal cliques
// of G[S]: succ1 for 0 <= a <= l, succ2 for 1 <= a and a+2 <= b <= l+1,
// succ3 for a+2 <= b <= l. S must be a connected interval set
// (ContractViolation otherwise) and v ∈ W \ S.
std::vector<IntervalCandidate> interval_candidates(const Graph& G, const VertexSet& W,
                                                   const VertexSet& S, Vertex v);

// succ(S, v): for each candidate, the component of G[S' ∪ {v}] holding v,
// extended to a maximal connected interval set of G[W]. Deduplicated.
void interval_successors(const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v,
                         StepCounter& steps, std::vector<VertexSet>& out);
std::vector<VertexSet> interval_successors(const Graph& G, const VertexSet& S, Vertex v);

// Maximal (connected) interval sets with polynomial delay.
std::unique_ptr<Enumerator> interval_enumerate(std::shared_ptr<const Graph> G, Variant variant,
                                               std::optional<std::size_t> limit = std::nullopt,
                                               bool checked = false);

}  // namespace heredenum
