#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/lift.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// Input-restricted enumerators: all maximal P sets of G[W] given that
// G[W - v] is in the class. Candidates from the case analysis are filtered
// for membership and maximality inside W, then deduplicated.
std::vector<VertexSet> edgeless_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                           StepCounter& steps);
std::vector<VertexSet> clique_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                         StepCounter& steps);
std::vector<VertexSet> cluster_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                          StepCounter& steps);
std::vector<VertexSet> split_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                        StepCounter& steps);
std::vector<VertexSet> pseudo_split_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                               StepCounter& steps);
std::vector<VertexSet> degree_restricted(int d, const Graph& G, const VertexSet& W, Vertex v,
                                         StepCounter& steps);

// Convenience forms over the whole graph.
std::vector<VertexSet> cluster_restricted(const Graph& G, Vertex v);
std::vector<VertexSet> split_restricted(const Graph& G, Vertex v);
std::vector<VertexSet> pseudo_split_restricted(const Graph& G, Vertex v);
std::vector<VertexSet> degree_restricted(int d, const Graph& G, Vertex v);

// Level-1 solver for the class: one of the explicit enumerators above, or
// the finite-family stack lifted down to level 1 for threshold, complete
// split, complete p-partite and complete bipartite. The connected variant
// is derived from the general one. Throws ConfigurationError for other
// classes.
RestrictedSolver cks_base(const ClassSpec& spec, Variant variant);

// Whether cks_base accepts the class.
bool has_cks_base(const ClassSpec& spec);

// Connected level-1 solver from a general one (connected_from_general).
RestrictedSolver connected_cks(RestrictedSolver general, ClassSpec spec);

// Polynomial-delay stream: the level-0 lift of a level-1 solver.
std::unique_ptr<Enumerator> cohen_lift(RestrictedSolver base, const ClassSpec& spec,
                                       Variant variant, std::shared_ptr<const Graph> G,
                                       std::optional<std::size_t> limit = std::nullopt);

}  // namespace heredenum
