#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// One candidate S' of the trivially perfect successor rules; the seed is
// S' ∪ {u, v}.
struct TpCandidate {
  Vertex u = 0;
  int rule = 0;  // 0..3
  VertexSet set;
};

// Candidates for succ(S, v) over G[W], before extension. S must be a
// connected trivially perfect set (ContractViolation otherwise) and v ∈ W \ S.
std::vector<TpCandidate> tp_candidates(const Graph& G, const VertexSet& W, const VertexSet& S,
                                       Vertex v);

// succ(S, v): every candidate seed extended to a maximal connected trivially
// perfect set of G[W]. Output is deduplicated; every set contains v.
void tp_successors(const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v,
                   StepCounter& steps, std::vector<VertexSet>& out);
std::vector<VertexSet> tp_successors(const Graph& G, const VertexSet& S, Vertex v);

// Maximal (connected) trivially perfect sets with polynomial delay.
std::unique_ptr<Enumerator> tp_enumerate(std::shared_ptr<const Graph> G, Variant variant,
                                         std::optional<std::size_t> limit = std::nullopt,
                                         bool checked = false);

}  // namespace heredenum
