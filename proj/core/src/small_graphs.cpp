#include "heredenum/small_graphs.hpp"

#include <cctype>

#include "four_leaf_data.hpp"
#include "heredenum/io.hpp"

namespace heredenum::graphs {

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  if (n >= 3) e.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph wheel(std::size_t k) {
  auto e = cycle(k).edges();
  for (Vertex v = 0; v < k; ++v) e.emplace_back(v, static_cast<Vertex>(k));
  return Graph(k + 1, e);
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph(part_of.size(), e);
}

Graph copies(const Graph& g, std::size_t k) {
  Graph out;
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }
Graph co_p3() { return Graph(3, {{1, 2}}); }
Graph claw() { return star(3); }
Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph net() {
  // triangle a1=0 b1=1 c=2 with pendants a=3, b=4, s=5
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph tent() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}});
}

Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

Graph dart() {
  // diamond with degree-3 vertices 1, 2; pendant 4 on 1
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}});
}

Graph gem() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }

Graph k5_minus_e() { return basic_four_leaf_power_list()[0]; }
Graph long_claw() { return basic_four_leaf_power_list()[2]; }
Graph whipping_top() { return basic_four_leaf_power_list()[3]; }

std::optional<Graph> by_name(const std::string& name) {
  auto sized = [&](char prefix) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoul(name.substr(1));
  };
  if (auto n = sized('P')) return path(*n);
  if (auto n = sized('C')) return cycle(*n);
  if (auto n = sized('K')) return complete(*n);
  if (auto n = sized('I')) return edgeless(*n);
  if (name == "2K2") return two_k2();
  if (name == "co-P3") return co_p3();
  if (name == "claw") return claw();
  if (name == "diamond") return diamond();
  if (name == "net") return net();
  if (name == "tent") return tent();
  if (name == "bull") return bull();
  if (name == "dart") return dart();
  if (name == "gem") return gem();
  if (name == "house") return house();
  if (name == "K5-e") return k5_minus_e();
  if (name == "long-claw") return long_claw();
  if (name == "whipping-top") return whipping_top();
  return std::nullopt;
}

const std::vector<Graph>& basic_four_leaf_power_list() {
  static const std::vector<Graph> list = io::parse_family(std::string(heredenum::detail::kBasicFourLeafPowerData));
  return list;
}

}  // namespace heredenum::graphs
