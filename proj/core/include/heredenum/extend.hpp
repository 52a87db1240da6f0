#pragma once

#include "heredenum/class_spec.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// Membership of G[U] in the class, charged as one step.
bool member(const ClassSpec& spec, const Graph& G, const VertexSet& U, StepCounter& steps);

// Membership plus connectivity (and nonempty) for the connected variant.
bool member(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& U,
            StepCounter& steps);

// Grows S to a maximal (connected) P set of G[W]. Vertices are tried in
// ascending id; the connected variant only tries current neighbors of the
// growing set. A rejected vertex is never tried again: the class is
// hereditary, so it stays rejected. Throws PreconditionError when S is not a
// (connected) P set inside W.
VertexSet extend(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S,
                 const VertexSet& W, StepCounter& steps);
VertexSet extend(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S);

// Whether S is a maximal (connected) P set of G[W].
bool is_solution(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S,
                 const VertexSet& W);
bool is_solution(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S);

}  // namespace heredenum
