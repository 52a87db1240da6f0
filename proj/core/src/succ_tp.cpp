#include "heredenum/succ_tp.hpp"

#include <unordered_set>
#include <variant>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/solution_map.hpp"

namespace heredenum {

namespace {

const ClassSpec& tp_spec() {
  static const ClassSpec spec = ClassSpec::of(ClassKind::TriviallyPerfect);
  return spec;
}

}  // namespace

std::vector<TpCandidate> tp_candidates(const Graph& G, const VertexSet& W, const VertexSet& S,
                                       Vertex v) {
  if (S.contains(v) || !W.contains(v)) throw PreconditionError("tp successor: v must be in W \\ S");
  auto built = build_generating_forest(G, S);
  if (!std::holds_alternative<GeneratingForest>(built) || !is_connected(G, S))
    throw ContractViolation("tp successor: S is not a connected trivially perfect set");
  const GeneratingForest& T = std::get<GeneratingForest>(built);
  const VertexSet& Nv = G.neighbors(v);
  const VertexSet Nvc = G.closed_neighbors(v);

  std::vector<TpCandidate> out;
  for (Vertex u : Nv & W) {
    VertexSet Su = S & G.neighbors(u);
    VertexSet hit = Su & Nv;
    out.push_back({u, 0, Su - Nv});
    for (Vertex w : hit) {
      // v becomes a child of w, so its neighbors must be exactly the
      // ancestors of w: this drops descendants of w adjacent to v and also
      // neighbors of v in other branches.
      VertexSet A = T.ancestors[w].with(w) - Nv;
      VertexSet D = (Su & Nv) - T.ancestors[w].with(w);
      out.push_back({u, 1, Su - (A | D)});
    }
    for (Vertex w : hit) out.push_back({u, 2, Su - (G.closed_neighbors(w) ^ Nvc)});
    std::vector<Vertex> h = hit.to_vector();
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        Vertex v1 = h[i], v2 = h[j];
        if (G.adjacent(v1, v2)) continue;
        Vertex top = T.lca(v1, v2);
        VertexSet up = T.ancestors[v1] | T.ancestors[v2];
        VertexSet A = top == GeneratingForest::kRoot ? up : up & T.descendants(top);
        VertexSet B = (G.neighbors(v1) | G.neighbors(v2)) - Nvc;
        VertexSet C = Nv - (G.closed_neighbors(v1) | G.closed_neighbors(v2));
        out.push_back({u, 3, Su - (A | B | C)});
      }
  }
  return out;
}

void tp_successors(const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v,
                   StepCounter& steps, std::vector<VertexSet>& out) {
  const ClassSpec& spec = tp_spec();
  std::unordered_set<VertexSet> seeds, done;
  for (TpCandidate& c : tp_candidates(G, W, S, v)) {
    steps.tick();
    VertexSet seed = c.set.with(c.u).with(v);
    if (!seeds.insert(seed).second) continue;
    if (!member(spec, Variant::Connected, G, seed, steps))
      throw ContractViolation("tp successor: rule " + std::to_string(c.rule) + " seed " +
                              seed.to_string() + " is not a connected trivially perfect set");
    VertexSet sol = extend(spec, Variant::Connected, G, seed, W, steps);
    if (done.insert(sol).second) out.push_back(std::move(sol));
  }
}

std::vector<VertexSet> tp_successors(const Graph& G, const VertexSet& S, Vertex v) {
  StepCounter steps;
  std::vector<VertexSet> out;
  tp_successors(G, G.vertices(), S, v, steps, out);
  return out;
}

std::unique_ptr<Enumerator> tp_enumerate(std::shared_ptr<const Graph> G, Variant variant,
                                         std::optional<std::size_t> limit, bool checked) {
  SuccessorFn succ = [](const Graph& H, const VertexSet& W, const VertexSet& S, Vertex v,
                        StepCounter& steps, std::vector<VertexSet>& out) {
    tp_successors(H, W, S, v, steps, out);
  };
  return solution_map_enumerate(tp_spec(), std::move(succ), std::move(G), variant, limit,
                                checked);
}

}  // namespace heredenum
