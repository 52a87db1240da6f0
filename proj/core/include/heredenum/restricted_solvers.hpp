#pragma once

#include <functional>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/lift.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// Every instance below is (G[W], Z) with Z ⊆ W contained in every forbidden
// set of G[W].

// Finite families at level t = largest forbidden order: the only possible
// forbidden set is Z itself. Needs capabilities(spec).finite.
std::vector<VertexSet> finite_f_restricted(const ClassSpec& spec, Variant variant, const Graph& G,
                                           const VertexSet& W, const VertexSet& Z,
                                           StepCounter& steps);
RestrictedSolver finite_f_solver(const ClassSpec& spec, Variant variant);

// Structure of a 3-restricted chordal instance after removing the vertices
// in no hole.
struct ChordalRestrictedAnalysis {
  VertexSet pruned;  // vertices of W in no hole of G[W]
  VertexSet core;    // W minus pruned
  std::size_t z_edges = 0;
  struct Piece {
    VertexSet component;  // a component of G[core - Z]
    Vertex a = 0;         // its two attachments in Z, a < b, nonadjacent
    Vertex b = 0;
  };
  std::vector<Piece> pieces;
};

// Throws ContractViolation naming the failed clause when the structure does
// not hold. Precondition: G[W] is not chordal.
ChordalRestrictedAnalysis analyze_chordal_restricted(const Graph& G, const VertexSet& W,
                                                     const VertexSet& Z);

// Minimal a-b separators of the chordal graph G[U].
std::vector<VertexSet> minimal_chordal_separators(const Graph& G, const VertexSet& U, Vertex a,
                                                  Vertex b);

std::vector<VertexSet> chordal_restricted3(Variant variant, const Graph& G, const VertexSet& W,
                                           const VertexSet& Z, StepCounter& steps);
RestrictedSolver chordal_restricted3_solver(Variant variant);

// Chordal classes with a finite extra list (unit interval, block, 3-leaf
// power, basic 4-leaf power, forest). Level = largest order in the list.
std::vector<VertexSet> chordal_like_restricted(const ClassSpec& spec, Variant variant,
                                               const Graph& G, const VertexSet& W,
                                               const VertexSet& Z, StepCounter& steps);
RestrictedSolver chordal_like_solver(const ClassSpec& spec, Variant variant);

// Maximal induced forests of G[W]. An empty ForestEnumerator means
// maximal_forests.
using ForestEnumerator = std::function<std::vector<VertexSet>(const Graph& G, const VertexSet& W)>;
std::vector<VertexSet> maximal_forests(const Graph& G, const VertexSet& W);
std::vector<VertexSet> maximal_forests(const Graph& G);

std::vector<VertexSet> wheel_free_restricted5(Variant variant, const Graph& G, const VertexSet& W,
                                              const VertexSet& Z, StepCounter& steps,
                                              const ForestEnumerator& forests = {});
RestrictedSolver wheel_free_solver(Variant variant, ForestEnumerator forests = {});

}  // namespace heredenum
