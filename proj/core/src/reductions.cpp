#include "heredenum/reductions.hpp"

#include <unordered_set>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"

namespace heredenum {

VertexSet Gadget::strip(const VertexSet& S) const { return (S - added).resized(original_order); }

VertexSet Gadget::embed(const VertexSet& S) const {
  return S.resized(graph.order()) | added;
}

Gadget universalize(const Graph& G) {
  std::size_t n = G.order();
  std::vector<Edge> edges = G.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(n));
  Gadget g{Graph(n + 1, edges), n, VertexSet(n + 1)};
  g.added.insert(static_cast<Vertex>(n));
  return g;
}

Gadget universalize(const ClassSpec& spec, const Graph& G) {
  if (!capabilities(spec).closed_under_universal)
    throw ConfigurationError(spec.name() + " is not closed under adding universal vertices");
  return universalize(G);
}

Gadget wheel_free_gadget(const Graph& G) {
  std::size_t n = G.order();
  auto u = static_cast<Vertex>(2 * n);
  std::vector<Edge> edges = G.edges();
  for (Vertex v = 0; v < n; ++v) {
    auto pendant = static_cast<Vertex>(n + v);
    edges.emplace_back(v, pendant);
    edges.emplace_back(pendant, u);
  }
  Gadget g{Graph(2 * n + 1, edges), n, VertexSet(2 * n + 1)};
  for (Vertex x = static_cast<Vertex>(n); x <= u; ++x) g.added.insert(x);
  return g;
}

Gadget degree_tree_gadget(int d, const Graph& G) {
  if (d < 2) throw PreconditionError("degree tree gadget needs d >= 2");
  std::size_t n = G.order();
  // Heap layout: node i has children 2i+1 and 2i+2; nodes n-1..2n-2 are the
  // leaves. Tree node i gets graph id n+i.
  std::size_t tree = n == 0 ? 0 : 2 * n - 1;
  std::vector<Edge> edges = G.edges();
  for (std::size_t i = 0; i < tree; ++i) {
    for (std::size_t c : {2 * i + 1, 2 * i + 2})
      if (c < tree) edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + c));
  }
  for (std::size_t leaf = 0; leaf < n; ++leaf)
    edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n + (n - 1) + leaf));
  Gadget g{Graph(n + tree, edges), n, VertexSet(n + tree)};
  for (std::size_t i = 0; i < tree; ++i) g.added.insert(static_cast<Vertex>(n + i));
  return g;
}

std::vector<VertexSet> not_z_solutions(const ClassSpec& spec, Variant variant, const Graph& G,
                                       const VertexSet& W, const VertexSet& Z, StepCounter& steps) {
  std::vector<VertexSet> out;
  if (member(spec, G, W, steps)) {
    if (variant == Variant::General) {
      out.push_back(W);
    } else {
      out = components(G, W);
    }
    return out;
  }
  if (variant == Variant::General) {
    for (Vertex z : Z) out.push_back(W.without(z));
    return out;
  }
  // A component C of G[W - z] can only be extended inside W by z itself.
  std::unordered_set<VertexSet> seen;
  for (Vertex z : Z) {
    for (VertexSet& C : components(G, W.without(z))) {
      if (seen.count(C)) continue;
      bool maximal = !G.neighbors(z).intersects(C) || !member(spec, G, C.with(z), steps);
      if (maximal) {
        seen.insert(C);
        out.push_back(std::move(C));
      }
    }
  }
  return out;
}

std::vector<VertexSet> connected_solutions_from_general(const ClassSpec& spec, const Graph& G,
                                                        const VertexSet& W, const VertexSet& Z,
                                                        const std::vector<VertexSet>& general,
                                                        StepCounter& steps) {
  const ClassCapabilities& caps = capabilities(spec);
  if (!caps.biconnected_from || *caps.biconnected_from > Z.size())
    throw ConfigurationError(spec.name() +
                             ": forbidden graphs of this order are not known to be biconnected");
  std::vector<VertexSet> out = not_z_solutions(spec, Variant::Connected, G, W, Z, steps);
  if (Z.empty() || member(spec, G, W, steps)) return out;
  std::unordered_set<VertexSet> seen(out.begin(), out.end());
  for (const VertexSet& T : general) {
    if (!Z.is_subset_of(T)) continue;
    VertexSet C = component_of(G, T, Z.front());
    if (!Z.is_subset_of(C))
      throw ContractViolation("Z is split across components of a general solution " +
                              T.to_string());
    if (seen.insert(C).second) out.push_back(std::move(C));
  }
  return out;
}

}  // namespace heredenum
