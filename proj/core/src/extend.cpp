#include "heredenum/extend.hpp"

#include "heredenum/errors.hpp"
#include "heredenum/recognition.hpp"

namespace heredenum {

bool member(const ClassSpec& spec, const Graph& G, const VertexSet& U, StepCounter& steps) {
  steps.tick();
  return in_class(spec, G, U);
}

bool member(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& U,
            StepCounter& steps) {
  if (variant == Variant::Connected && (U.empty() || !is_connected(G, U))) return false;
  return member(spec, G, U, steps);
}

VertexSet extend(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S,
                 const VertexSet& W, StepCounter& steps) {
  if (!S.is_subset_of(W)) throw PreconditionError("extend: seed is not inside the universe");
  if (!member(spec, variant, G, S, steps))
    throw PreconditionError(variant == Variant::Connected
                                ? "extend: seed is not a connected P set"
                                : "extend: seed is not a P set");
  VertexSet cur = S;
  if (variant == Variant::General) {
    for (Vertex v : W - S) {
      cur.insert(v);
      if (!member(spec, G, cur, steps)) cur.erase(v);
    }
    return cur;
  }
  VertexSet tried = S;
  VertexSet frontier = G.neighborhood(cur) & W;
  while (true) {
    frontier -= tried;
    if (frontier.empty()) break;
    Vertex v = frontier.front();
    tried.insert(v);
    cur.insert(v);
    if (member(spec, G, cur, steps)) {
      frontier |= G.neighbors(v) & W;
    } else {
      cur.erase(v);
    }
  }
  return cur;
}

VertexSet extend(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S) {
  StepCounter steps;
  return extend(spec, variant, G, S, G.vertices(), steps);
}

bool is_solution(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S,
                 const VertexSet& W) {
  if (!S.is_subset_of(W)) return false;
  StepCounter steps;
  if (!member(spec, variant, G, S, steps)) return false;
  VertexSet probe = variant == Variant::Connected ? (G.neighborhood(S) & W) : (W - S);
  for (Vertex v : probe)
    if (in_class(spec, G, S.with(v))) return false;
  return true;
}

bool is_solution(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& S) {
  return is_solution(spec, variant, G, S, G.vertices());
}

}  // namespace heredenum
