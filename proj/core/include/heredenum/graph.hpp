#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "heredenum/vertex_set.hpp"

namespace heredenum {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws std::domain_error on out-of-range ids or self-loops. Repeated edges
  // are merged.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  // Union of neighborhoods of U, minus U.
  VertexSet neighborhood(const VertexSet& U) const;

  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

// G[U] with ids renumbered 0..|U|-1 in ascending order of the parent ids.
struct SubgraphView {
  Graph graph;
  VertexSet selected;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> to_local;  // parent id -> local id, or npos

  static constexpr Vertex npos = static_cast<Vertex>(-1);

  VertexSet lift(const VertexSet& local) const;
  VertexSet lower(const VertexSet& parent) const;
};

SubgraphView induced_subgraph(const Graph& G, const VertexSet& U);

// Components of G[U] ordered by smallest member.
std::vector<VertexSet> components(const Graph& G, const VertexSet& U);
std::vector<VertexSet> components(const Graph& G);

// The component of G[U] containing v (v must be in U).
VertexSet component_of(const Graph& G, const VertexSet& U, Vertex v);

bool is_connected(const Graph& G, const VertexSet& U);
bool is_connected(const Graph& G);

std::size_t edge_count(const Graph& G, const VertexSet& U);

Graph complement(const Graph& G);

// Disjoint union with the second graph's ids shifted by first.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace heredenum
