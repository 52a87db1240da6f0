#include "heredenum/graph.hpp"

#include <stdexcept>

namespace heredenum {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::domain_error("edge endpoint out of range");
    if (u == v) throw std::domain_error("self-loop");
    if (!adj_[u].contains(v)) {
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++edges_;
    }
  }
}

VertexSet Graph::neighborhood(const VertexSet& U) const {
  VertexSet out(order());
  for (Vertex v : U) out |= adj_[v];
  return out - U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet SubgraphView::lift(const VertexSet& local) const {
  VertexSet out(selected.universe());
  for (Vertex v : local) out.insert(to_parent[v]);
  return out;
}

VertexSet SubgraphView::lower(const VertexSet& parent) const {
  VertexSet out(to_parent.size());
  for (Vertex v : parent) {
    if (to_local[v] == npos) throw std::domain_error("vertex not in view");
    out.insert(to_local[v]);
  }
  return out;
}

SubgraphView induced_subgraph(const Graph& G, const VertexSet& U) {
  if (U.universe() != G.order()) {
    for (Vertex v : U)
      if (v >= G.order()) throw std::domain_error("vertex id out of range");
  }
  SubgraphView view;
  view.selected = U.universe() == G.order() ? U : U.resized(G.order());
  view.to_local.assign(G.order(), SubgraphView::npos);
  for (Vertex v : view.selected) {
    view.to_local[v] = static_cast<Vertex>(view.to_parent.size());
    view.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < view.to_parent.size(); ++a)
    for (Vertex w : G.neighbors(view.to_parent[a]) & view.selected)
      if (view.to_local[w] > a) edges.emplace_back(a, view.to_local[w]);
  view.graph = Graph(view.to_parent.size(), edges);
  return view;
}

VertexSet component_of(const Graph& G, const VertexSet& U, Vertex v) {
  VertexSet comp(G.order());
  comp.insert(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next(G.order());
    for (Vertex x : frontier) next |= G.neighbors(x);
    next &= U;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& G, const VertexSet& U) {
  std::vector<VertexSet> out;
  VertexSet rest = U;
  while (!rest.empty()) {
    VertexSet comp = component_of(G, rest, rest.front());
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& G) {
  return components(G, G.vertices());
}

bool is_connected(const Graph& G, const VertexSet& U) {
  if (U.empty()) return true;
  return component_of(G, U, U.front()) == U;
}

bool is_connected(const Graph& G) { return is_connected(G, G.vertices()); }

std::size_t edge_count(const Graph& G, const VertexSet& U) {
  std::size_t twice = 0;
  for (Vertex v : U) twice += (G.neighbors(v) & U).size();
  return twice / 2;
}

Graph complement(const Graph& G) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < G.order(); ++u)
    for (Vertex v = u + 1; v < G.order(); ++v)
      if (!G.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(G.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), edges);
}

}  // namespace heredenum
