#include "heredenum/recognition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "heredenum/errors.hpp"

namespace heredenum {

// ---- trivially perfect ------------------------------------------------------

VertexSet GeneratingForest::descendants(Vertex a) const {
  VertexSet out(vertices.universe());
  for (Vertex v : vertices)
    if (ancestors[v].contains(a)) out.insert(v);
  return out;
}

Vertex GeneratingForest::lca(Vertex a, Vertex b) const {
  if (a == b) return a;
  if (is_ancestor(a, b)) return a;
  if (is_ancestor(b, a)) return b;
  VertexSet common = ancestors[a] & ancestors[b];
  // The deepest common ancestor has the most ancestors itself.
  Vertex best = kRoot;
  std::size_t depth = 0;
  for (Vertex c : common) {
    std::size_t d = ancestors[c].size() + 1;
    if (d > depth) {
      depth = d;
      best = c;
    }
  }
  return best;
}

namespace {

std::optional<Vertex> universal_vertex(const Graph& G, const VertexSet& C) {
  std::size_t need = C.size() - 1;
  for (Vertex v : C)
    if ((G.neighbors(v) & C).size() == need) return v;
  return std::nullopt;
}

}  // namespace

std::variant<GeneratingForest, NotTriviallyPerfect> build_generating_forest(
    const Graph& G, const VertexSet& U) {
  std::size_t n = G.order();
  GeneratingForest F;
  F.vertices = U;
  F.parent.assign(n, GeneratingForest::kRoot);
  F.ancestors.assign(n, VertexSet(n));

  struct Frame {
    VertexSet piece;
    Vertex parent;
  };
  // Iterative construction; postorder is produced by reversing a
  // parent-before-children listing built in reverse child order.
  std::vector<Vertex> preorder_rev;
  std::vector<Frame> stack;
  auto roots = components(G, U);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    stack.push_back({*it, GeneratingForest::kRoot});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    auto r = universal_vertex(G, f.piece);
    if (!r) return NotTriviallyPerfect{f.piece};
    F.parent[*r] = f.parent;
    if (f.parent != GeneratingForest::kRoot)
      F.ancestors[*r] = F.ancestors[f.parent].with(f.parent);
    preorder_rev.push_back(*r);
    auto kids = components(G, f.piece.without(*r));
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, *r});
  }
  // Postorder: children before parents, siblings in ascending order.
  std::vector<std::vector<Vertex>> children(n);
  std::vector<Vertex> top;
  for (Vertex v : preorder_rev) {
    if (F.parent[v] == GeneratingForest::kRoot) top.push_back(v);
    else children[F.parent[v]].push_back(v);
  }
  std::vector<std::pair<Vertex, std::size_t>> walk;
  for (Vertex r : top) {
    walk.push_back({r, 0});
    while (!walk.empty()) {
      auto& [v, i] = walk.back();
      if (i < children[v].size()) {
        Vertex c = children[v][i++];
        walk.push_back({c, 0});
      } else {
        F.order.push_back(v);
        walk.pop_back();
      }
    }
  }
  return F;
}

std::variant<GeneratingForest, NotTriviallyPerfect> build_generating_forest(const Graph& G) {
  return build_generating_forest(G, G.vertices());
}

// ---- chordal ------------------------------------------------------------------

namespace {

// Maximum cardinality search; returns an elimination order (reverse of the
// visit order). Ties go to the smallest id.
std::vector<Vertex> mcs_order(const Graph& G, const VertexSet& U) {
  std::size_t n = G.order();
  std::vector<std::size_t> weight(n, 0);
  VertexSet left = U;
  std::vector<Vertex> visit;
  visit.reserve(U.size());
  while (!left.empty()) {
    Vertex best = left.front();
    for (Vertex v : left)
      if (weight[v] > weight[best]) best = v;
    visit.push_back(best);
    left.erase(best);
    for (Vertex w : G.neighbors(best) & left) ++weight[w];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Later neighbors of each vertex in the given elimination order.
std::vector<VertexSet> later_neighbors(const Graph& G, const VertexSet& U,
                                       const std::vector<Vertex>& peo) {
  std::size_t n = G.order();
  std::vector<VertexSet> later(n, VertexSet(n));
  VertexSet after = U;
  for (Vertex v : peo) {
    after.erase(v);
    later[v] = G.neighbors(v) & after;
  }
  return later;
}

bool is_peo(const Graph& G, const VertexSet& U, const std::vector<Vertex>& peo,
            const std::vector<VertexSet>& later) {
  std::vector<std::size_t> pos(G.order(), 0);
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = i;
  for (Vertex v : peo) {
    if (later[v].empty()) continue;
    Vertex next = later[v].front();
    for (Vertex w : later[v])
      if (pos[w] < pos[next]) next = w;
    VertexSet rest = later[v].without(next);
    if (!rest.is_subset_of(G.neighbors(next))) return false;
  }
  (void)U;
  return true;
}

std::vector<Vertex> bfs_path(const Graph& G, const VertexSet& allowed, Vertex from, Vertex to) {
  std::vector<Vertex> prev(G.order(), static_cast<Vertex>(-1));
  std::deque<Vertex> q{from};
  VertexSet seen(G.order());
  seen.insert(from);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (x == to) break;
    for (Vertex y : G.neighbors(x) & allowed) {
      if (seen.contains(y)) continue;
      seen.insert(y);
      prev[y] = x;
      q.push_back(y);
    }
  }
  if (!seen.contains(to)) return {};
  std::vector<Vertex> path;
  for (Vertex x = to; x != from; x = prev[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Hole> hole_through(const Graph& G, const VertexSet& U, Vertex v) {
  VertexSet nv = G.neighbors(v) & U;
  VertexSet blocked = nv.with(v);
  for (Vertex u : nv) {
    for (Vertex w : nv) {
      if (w <= u || G.adjacent(u, w)) continue;
      VertexSet allowed = (U - blocked).with(u).with(w);
      auto p = bfs_path(G, allowed, u, w);
      if (p.empty()) continue;
      Hole h;
      h.cycle.push_back(v);
      h.cycle.insert(h.cycle.end(), p.begin(), p.end());
      return h;
    }
  }
  return std::nullopt;
}

bool vertex_in_hole(const Graph& G, const VertexSet& U, Vertex v) {
  return hole_through(G, U, v).has_value();
}

bool vertex_in_hole(const Graph& G, Vertex v) { return vertex_in_hole(G, G.vertices(), v); }

namespace {

// is_chordal on at most 64 vertices: the same MCS order and PEO check on
// 64-bit masks.
bool is_chordal_dense(const Graph& G, const VertexSet& U) {
  std::array<std::uint64_t, 64> nb{};
  std::uint64_t u = 0;
  for (Vertex v : U) u |= std::uint64_t{1} << v;
  for (Vertex v : U)
    for (Vertex w : G.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
  for (Vertex v : U) nb[v] &= u;
  std::array<int, 64> weight{};
  std::array<Vertex, 64> visit{};
  std::size_t k = 0;
  for (std::uint64_t left = u; left;) {
    Vertex best = static_cast<Vertex>(std::countr_zero(left));
    for (std::uint64_t l = left; l; l &= l - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(l));
      if (weight[v] > weight[best]) best = v;
    }
    visit[k++] = best;
    left &= ~(std::uint64_t{1} << best);
    for (std::uint64_t w = nb[best] & left; w; w &= w - 1) ++weight[std::countr_zero(w)];
  }
  // The elimination order is the reverse visit order, so the earliest later
  // neighbor is the one visited last.
  std::uint64_t after = u;
  for (std::size_t i = k; i-- > 0;) {
    Vertex v = visit[i];
    after &= ~(std::uint64_t{1} << v);
    std::uint64_t later = nb[v] & after;
    if (!later) continue;
    Vertex next = visit[0];
    for (std::size_t j = i; j-- > 0;)
      if (later >> visit[j] & 1U) {
        next = visit[j];
        break;
      }
    std::uint64_t rest = later & ~(std::uint64_t{1} << next);
    if (rest & ~nb[next]) return false;
  }
  return true;
}

}  // namespace

bool is_chordal(const Graph& G, const VertexSet& U) {
  if (G.order() <= 64) return is_chordal_dense(G, U);
  auto peo = mcs_order(G, U);
  return is_peo(G, U, peo, later_neighbors(G, U, peo));
}

std::variant<ChordalCertificate, Hole> chordal_certificates(const Graph& G, const VertexSet& U) {
  auto peo = mcs_order(G, U);
  auto later = later_neighbors(G, U, peo);
  if (!is_peo(G, U, peo, later)) {
    for (Vertex v : U)
      if (auto h = hole_through(G, U, v)) return *h;
    throw ContractViolation("no perfect elimination ordering but no hole found");
  }
  ChordalCertificate cert;
  cert.peo = peo;
  std::vector<VertexSet> candidates;
  for (Vertex v : peo) candidates.push_back(later[v].with(v));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      if (candidates[i].is_subset_of(candidates[j]) &&
          (candidates[i] != candidates[j] || j < i))
        maximal = false;
    }
    if (maximal) cert.cliques.push_back(candidates[i]);
  }
  // Maximum-weight spanning forest of the clique intersection graph (Prim).
  std::size_t k = cert.cliques.size();
  std::vector<bool> in_tree(k, false);
  std::vector<long> best(k, -1);
  std::vector<std::size_t> link(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!in_tree[i] && (pick == k || best[i] > best[pick])) pick = i;
    in_tree[pick] = true;
    if (best[pick] > 0) cert.clique_tree.emplace_back(link[pick], pick);
    for (std::size_t i = 0; i < k; ++i) {
      if (in_tree[i]) continue;
      long w = static_cast<long>((cert.cliques[i] & cert.cliques[pick]).size());
      if (w > best[i]) {
        best[i] = w;
        link[i] = pick;
      }
    }
  }
  std::unordered_set<VertexSet> seen;
  for (auto [a, b] : cert.clique_tree) {
    VertexSet s = cert.cliques[a] & cert.cliques[b];
    if (seen.insert(s).second) cert.minimal_separators.push_back(s);
  }
  return cert;
}

std::variant<ChordalCertificate, Hole> chordal_certificates(const Graph& G) {
  return chordal_certificates(G, G.vertices());
}

// ---- interval ---------------------------------------------------------------

namespace {

// Backtracking over clique orders. A clique may follow `last` only if it
// meets `last` and every vertex it shares with already placed cliques is in
// `last`. Failed (placed, last) states are memoized.
struct ArrangementSearch {
  const std::vector<VertexSet>& cliques;
  std::unordered_set<VertexSet> failed;
  std::vector<std::size_t> order;

  VertexSet key(const VertexSet& placed, std::size_t last) const {
    std::size_t k = cliques.size();
    VertexSet out(2 * k);
    for (Vertex i : placed) out.insert(i);
    out.insert(static_cast<Vertex>(k + last));
    return out;
  }

  bool extend(VertexSet& placed, const VertexSet& used, std::size_t last) {
    if (placed.size() == cliques.size()) return true;
    VertexSet k = key(placed, last);
    if (failed.count(k)) return false;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (placed.contains(static_cast<Vertex>(i))) continue;
      const VertexSet& K = cliques[i];
      if (!K.intersects(cliques[last])) continue;
      if (!(K & used).is_subset_of(cliques[last])) continue;
      placed.insert(static_cast<Vertex>(i));
      order.push_back(i);
      if (extend(placed, used | K, i)) return true;
      order.pop_back();
      placed.erase(static_cast<Vertex>(i));
    }
    failed.insert(std::move(k));
    return false;
  }
};

// No three pairwise nonadjacent vertices of G[U] such that each pair is
// joined by a path avoiding the closed neighborhood of the third. A chordal
// graph is interval exactly when this holds.
bool asteroidal_triple_free(const Graph& G, const VertexSet& U) {
  std::vector<Vertex> vs = U.to_vector();
  std::size_t k = vs.size();
  if (k < 3) return true;
  std::vector<int> index(G.order(), -1);
  for (std::size_t i = 0; i < k; ++i) index[vs[i]] = static_cast<int>(i);
  // comp[i][j]: component of vs[j] in G[U - N[vs[i]]], or -1.
  std::vector<std::vector<int>> comp(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet rest = U - G.closed_neighbors(vs[i]);
    for (int id = 0; !rest.empty(); ++id) {
      VertexSet C = component_of(G, rest, rest.front());
      for (Vertex x : C) comp[i][index[x]] = id;
      rest -= C;
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      if (G.adjacent(vs[a], vs[b])) continue;
      for (std::size_t c = b + 1; c < k; ++c) {
        if (G.adjacent(vs[a], vs[c]) || G.adjacent(vs[b], vs[c])) continue;
        if (comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] && comp[a][b] == comp[a][c])
          return false;
      }
    }
  return true;
}

std::optional<std::vector<std::size_t>> arrange(const std::vector<VertexSet>& cliques) {
  if (cliques.size() <= 2) {
    std::vector<std::size_t> o(cliques.size());
    std::iota(o.begin(), o.end(), 0);
    return o;
  }
  ArrangementSearch search{cliques, {}, {}};
  for (std::size_t start = 0; start < cliques.size(); ++start) {
    VertexSet placed(cliques.size());
    placed.insert(static_cast<Vertex>(start));
    search.order = {start};
    if (search.extend(placed, cliques[start], start)) return search.order;
  }
  return std::nullopt;
}

}  // namespace

std::variant<CliquePath, NotInterval> build_clique_path(const Graph& G, const VertexSet& U) {
  auto cert = chordal_certificates(G, U);
  if (std::holds_alternative<Hole>(cert)) return NotInterval{NotIntervalReason::NotChordal};
  if (!asteroidal_triple_free(G, U)) return NotInterval{NotIntervalReason::NoConsecutiveArrangement};
  const auto& all = std::get<ChordalCertificate>(cert).cliques;
  CliquePath path;
  for (const VertexSet& comp : components(G, U)) {
    std::vector<VertexSet> mine;
    for (const VertexSet& K : all)
      if (K.intersects(comp)) mine.push_back(K);
    std::sort(mine.begin(), mine.end(), LexLess{});
    auto order = arrange(mine);
    if (!order) return NotInterval{NotIntervalReason::NoConsecutiveArrangement};
    for (std::size_t i : *order) path.cliques.push_back(mine[i]);
  }
  path.lp.assign(G.order(), -1);
  path.rp.assign(G.order(), -1);
  for (std::size_t i = 0; i < path.cliques.size(); ++i) {
    for (Vertex v : path.cliques[i]) {
      if (path.lp[v] < 0) path.lp[v] = static_cast<int>(i);
      path.rp[v] = static_cast<int>(i);
    }
  }
  return path;
}

std::variant<CliquePath, NotInterval> build_clique_path(const Graph& G) {
  return build_clique_path(G, G.vertices());
}

// ---- wheels and forests -----------------------------------------------------

bool is_forest(const Graph& G, const VertexSet& U) {
  return edge_count(G, U) + components(G, U).size() == U.size();
}

VertexSet cycle_vertices(const Graph& G, const VertexSet& U) {
  // x lies on a cycle iff some edge xy of G[U] is not a bridge.
  VertexSet out(G.order());
  for (Vertex x : U) {
    if (out.contains(x)) continue;
    for (Vertex y : G.neighbors(x) & U) {
      // Is y reachable from x without using the edge xy?
      VertexSet reach(G.order());
      reach.insert(x);
      VertexSet frontier = reach;
      bool found = false;
      while (!frontier.empty() && !found) {
        VertexSet next(G.order());
        for (Vertex a : frontier) {
          VertexSet nb = G.neighbors(a) & U;
          if (a == x) nb.erase(y);
          next |= nb;
        }
        next -= reach;
        if (next.contains(y)) found = true;
        reach |= next;
        frontier = std::move(next);
      }
      if (found) {
        out.insert(x);
        out.insert(y);
        break;
      }
    }
  }
  return out;
}

WheelRoles wheel_roles(const Graph& G, const VertexSet& U) {
  WheelRoles roles{VertexSet(G.order()), VertexSet(G.order()), VertexSet(G.order())};
  for (Vertex v : U) {
    VertexSet H = G.neighbors(v) & U;
    if (is_forest(G, H)) continue;
    roles.centers.insert(v);
    roles.rims |= cycle_vertices(G, H);
  }
  roles.in_wheel = roles.centers | roles.rims;
  return roles;
}

WheelRoles wheel_roles(const Graph& G) { return wheel_roles(G, G.vertices()); }

// ---- induced subgraph search ------------------------------------------------

namespace {

// F's vertices in BFS order per component, each component starting from a
// highest-degree vertex. adj[i] has bit j set when order[i] ~ order[j].
struct PatternPlan {
  std::size_t k = 0;
  std::array<Vertex, kMaxPatternOrder> order{};
  std::array<int, kMaxPatternOrder> anchor{};  // earlier F neighbor in `order`, or -1
  std::array<int, kMaxPatternOrder> degree{};
  std::array<std::uint32_t, kMaxPatternOrder> adj{};
};

PatternPlan plan_pattern(const Graph& F) {
  PatternPlan p;
  p.k = F.order();
  std::array<std::uint32_t, kMaxPatternOrder> nb{};
  for (Vertex a = 0; a < p.k; ++a)
    for (Vertex b : F.neighbors(a)) nb[a] |= std::uint32_t{1} << b;
  std::array<int, kMaxPatternOrder> pos{};
  std::uint32_t left = p.k ? (std::uint32_t{1} << p.k) - 1 : 0;
  std::size_t n = 0;
  while (left) {
    Vertex start = static_cast<Vertex>(std::countr_zero(left));
    for (std::uint32_t l = left; l; l &= l - 1) {
      Vertex f = static_cast<Vertex>(std::countr_zero(l));
      if (std::popcount(nb[f]) > std::popcount(nb[start])) start = f;
    }
    left &= ~(std::uint32_t{1} << start);
    std::size_t head = n;
    pos[start] = static_cast<int>(n);
    p.order[n] = start;
    p.anchor[n++] = -1;
    while (head < n) {
      Vertex x = p.order[head++];
      for (std::uint32_t y = nb[x] & left; y; y &= y - 1) {
        Vertex f = static_cast<Vertex>(std::countr_zero(y));
        left &= ~(std::uint32_t{1} << f);
        pos[f] = static_cast<int>(n);
        p.order[n] = f;
        p.anchor[n++] = pos[x];
      }
    }
  }
  for (std::size_t i = 0; i < p.k; ++i) {
    p.degree[i] = std::popcount(nb[p.order[i]]);
    for (std::uint32_t y = nb[p.order[i]]; y; y &= y - 1)
      p.adj[i] |= std::uint32_t{1} << pos[std::countr_zero(y)];
  }
  return p;
}

struct PatternMatch {
  const PatternPlan& plan;
  const Graph& G;
  const VertexSet& U;
  std::vector<Vertex> image;  // by position in plan.order
  VertexSet used;

  bool search(std::size_t i) {
    if (i == plan.k) return true;
    VertexSet cand = plan.anchor[i] >= 0 ? (G.neighbors(image[plan.anchor[i]]) & U) : U;
    cand -= used;
    for (Vertex g : cand) {
      if ((G.neighbors(g) & U).size() < static_cast<std::size_t>(plan.degree[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = ((plan.adj[i] >> j) & 1U) == static_cast<std::uint32_t>(G.adjacent(g, image[j]));
      if (!ok) continue;
      image[i] = g;
      used.insert(g);
      if (search(i + 1)) return true;
      used.erase(g);
    }
    return false;
  }
};

// G[U] as 64-bit masks, for graphs on at most 64 vertices.
struct DenseView {
  std::uint64_t u = 0;
  std::array<std::uint64_t, 64> nb{};
  std::array<int, 64> degree{};
};

DenseView dense_view(const Graph& G, const VertexSet& U) {
  DenseView d;
  for (Vertex v : U) d.u |= std::uint64_t{1} << v;
  for (Vertex v : U) {
    std::uint64_t m = 0;
    for (Vertex w : G.neighbors(v)) m |= std::uint64_t{1} << w;
    d.nb[v] = m & d.u;
    d.degree[v] = std::popcount(d.nb[v]);
  }
  return d;
}

bool dense_search(const PatternPlan& p, const DenseView& d, std::size_t i, std::uint64_t used,
                  std::array<Vertex, kMaxPatternOrder>& image) {
  if (i == p.k) return true;
  std::uint64_t cand = (p.anchor[i] >= 0 ? d.nb[image[p.anchor[i]]] : d.u) & ~used;
  for (std::size_t j = 0; j < i; ++j)
    cand &= (p.adj[i] >> j & 1U) ? d.nb[image[j]] : ~d.nb[image[j]];
  for (; cand; cand &= cand - 1) {
    Vertex g = static_cast<Vertex>(std::countr_zero(cand));
    if (d.degree[g] < p.degree[i]) continue;
    image[i] = g;
    if (dense_search(p, d, i + 1, used | std::uint64_t{1} << g, image)) return true;
  }
  return false;
}

std::optional<VertexSet> find_with_plan(const PatternPlan& plan, const Graph& G,
                                        const VertexSet& U, const DenseView* dense) {
  std::size_t k = plan.k;
  if (k > U.size()) return std::nullopt;
  if (k == 0) return VertexSet(G.order());
  VertexSet out(G.order());
  if (dense) {
    std::array<Vertex, kMaxPatternOrder> image{};
    if (!dense_search(plan, *dense, 0, 0, image)) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) out.insert(image[i]);
    return out;
  }
  PatternMatch m{plan, G, U, std::vector<Vertex>(k), VertexSet(G.order())};
  if (!m.search(0)) return std::nullopt;
  for (Vertex g : m.image) out.insert(g);
  return out;
}

void check_pattern_order(const Graph& F) {
  if (F.order() > kMaxPatternOrder)
    throw UnsupportedError("pattern graphs are limited to " + std::to_string(kMaxPatternOrder) +
                           " vertices");
}

}  // namespace

std::optional<VertexSet> find_induced(const Graph& F, const Graph& G, const VertexSet& U) {
  check_pattern_order(F);
  if (F.order() > U.size()) return std::nullopt;
  PatternPlan plan = plan_pattern(F);
  if (G.order() <= 64) {
    DenseView d = dense_view(G, U);
    return find_with_plan(plan, G, U, &d);
  }
  return find_with_plan(plan, G, U, nullptr);
}

bool contains_induced(const Graph& F, const Graph& G, const VertexSet& U) {
  return find_induced(F, G, U).has_value();
}

bool contains_induced(const Graph& F, const Graph& G) {
  return contains_induced(F, G, G.vertices());
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && contains_induced(a, b);
}

// ---- membership -------------------------------------------------------------

namespace {

bool free_of(const std::vector<Graph>& list, const Graph& G, const VertexSet& U) {
  if (G.order() > 64) {
    for (const Graph& F : list)
      if (contains_induced(F, G, U)) return false;
    return true;
  }
  std::optional<DenseView> d;
  for (const Graph& F : list) {
    if (F.order() > U.size()) continue;
    check_pattern_order(F);
    if (!d) d = dense_view(G, U);
    if (find_with_plan(plan_pattern(F), G, U, &*d)) return false;
  }
  return true;
}

bool is_complete_multipartite(const Graph& G, const VertexSet& U, int max_parts) {
  VertexSet left = U;
  int parts = 0;
  while (!left.empty()) {
    Vertex v = left.front();
    VertexSet part = U - G.neighbors(v);
    for (Vertex u : part)
      if ((U - G.neighbors(u)) != part) return false;
    left -= part;
    ++parts;
  }
  return parts <= max_parts;
}

}  // namespace

bool in_class(const ClassSpec& spec, const Graph& G, const VertexSet& U) {
  switch (spec.kind) {
    case ClassKind::Edgeless:
      for (Vertex v : U)
        if (G.neighbors(v).intersects(U)) return false;
      return true;
    case ClassKind::Cluster:
      for (Vertex v : U) {
        VertexSet cv = (G.neighbors(v) & U).with(v);
        for (Vertex u : G.neighbors(v) & U)
          if ((G.neighbors(u) & U).with(u) != cv) return false;
      }
      return true;
    case ClassKind::Clique: {
      std::size_t need = U.size() - 1;
      for (Vertex v : U)
        if ((G.neighbors(v) & U).size() != need) return false;
      return true;
    }
    case ClassKind::CompletePPartite:
      return is_complete_multipartite(G, U, spec.p);
    case ClassKind::CompleteBipartite:
      return is_complete_multipartite(G, U, 2);
    case ClassKind::Split:
    case ClassKind::CompleteSplit:
    case ClassKind::PseudoSplit:
    case ClassKind::Threshold:
    case ClassKind::FiniteForbidden:
      return free_of(capabilities(spec).small_forbidden, G, U);
    case ClassKind::DegreeBounded:
      for (Vertex v : U)
        if ((G.neighbors(v) & U).size() > static_cast<std::size_t>(spec.d)) return false;
      return true;
    case ClassKind::TriviallyPerfect:
      // (P4, C4)-free iff every edge has nested closed neighbourhoods.
      for (Vertex u : U) {
        VertexSet nu = (G.neighbors(u) & U).with(u);
        for (Vertex v : G.neighbors(u) & U) {
          if (v < u) continue;
          VertexSet nv = (G.neighbors(v) & U).with(v);
          if (!nu.is_subset_of(nv) && !nv.is_subset_of(nu)) return false;
        }
      }
      return true;
    case ClassKind::Interval:
      return is_chordal(G, U) && asteroidal_triple_free(G, U);
    case ClassKind::Chordal:
      return is_chordal(G, U);
    case ClassKind::UnitInterval:
    case ClassKind::Block:
    case ClassKind::ThreeLeafPower:
    case ClassKind::BasicFourLeafPower:
      return is_chordal(G, U) && free_of(capabilities(spec).small_forbidden, G, U);
    case ClassKind::WheelFree:
      for (Vertex v : U)
        if (!is_forest(G, G.neighbors(v) & U)) return false;
      return true;
    case ClassKind::Forest:
      return is_forest(G, U);
  }
  return false;
}

bool recognize(const ClassSpec& spec, const Graph& G, bool connected_variant) {
  VertexSet all = G.vertices();
  if (connected_variant && !is_connected(G, all)) return false;
  return in_class(spec, G, all);
}

}  // namespace heredenum
