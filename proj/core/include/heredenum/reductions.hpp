#pragma once

#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

// A graph built from G by adding vertices. Original vertices keep their ids
// 0..n-1; added vertices come after them.
struct Gadget {
  Graph graph;
  std::size_t original_order = 0;
  VertexSet added;

  // Drops added vertices and returns a set over the original graph.
  VertexSet strip(const VertexSet& S) const;
  // S plus all added vertices, over the gadget graph.
  VertexSet embed(const VertexSet& S) const;
};

// G plus a vertex adjacent to everything; the new vertex has id n.
Gadget universalize(const Graph& G);
// Same, refusing classes that are not closed under adding universal vertices
// (ConfigurationError).
Gadget universalize(const ClassSpec& spec, const Graph& G);

// For each v a pendant v' (id n+v), plus u (id 2n) adjacent to every v'.
Gadget wheel_free_gadget(const Graph& G);

// A binary tree with n leaves, leaf i attached to vertex i. Maximal
// d-degree-bounded sets of G correspond to the maximal connected
// (d+1)-degree-bounded sets of the result that contain every tree vertex.
// Throws PreconditionError for d < 2.
Gadget degree_tree_gadget(int d, const Graph& G);

// Restricted instance: the graph G[W] with Z ⊆ W contained in every forbidden
// set of G[W].

// Solutions of G[W] that do not contain all of Z. When G[W] is in the class
// this is {W} (general) or the components of G[W] (connected).
std::vector<VertexSet> not_z_solutions(const ClassSpec& spec, Variant variant, const Graph& G,
                                       const VertexSet& W, const VertexSet& Z, StepCounter& steps);

// Connected solutions of G[W] from its general solutions. Needs every
// forbidden graph on at least |Z| vertices to be biconnected
// (ConfigurationError otherwise). `general` must contain every general
// solution that includes Z; others are ignored.
std::vector<VertexSet> connected_solutions_from_general(const ClassSpec& spec, const Graph& G,
                                                        const VertexSet& W, const VertexSet& Z,
                                                        const std::vector<VertexSet>& general,
                                                        StepCounter& steps);

}  // namespace heredenum
