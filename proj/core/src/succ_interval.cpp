#include "heredenum/succ_interval.hpp"

#include <unordered_set>
#include <variant>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/solution_map.hpp"

namespace heredenum {

namespace {

const ClassSpec& interval_spec() {
  static const ClassSpec spec = ClassSpec::of(ClassKind::Interval);
  return spec;
}

}  // namespace

std::vector<IntervalCandidate> interval_candidates(const Graph& G, const VertexSet& W,
                                                   const VertexSet& S, Vertex v) {
  if (S.contains(v) || !W.contains(v))
    throw PreconditionError("interval successor: v must be in W \\ S");
  auto built = build_clique_path(G, S);
  if (!std::holds_alternative<CliquePath>(built) || !is_connected(G, S))
    throw ContractViolation("interval successor: S is not a connected interval set");
  const auto& path = std::get<CliquePath>(built).cliques;
  const int l = static_cast<int>(path.size());
  std::vector<VertexSet> K;
  K.reserve(path.size() + 2);
  K.push_back(G.empty_set());
  for (const VertexSet& c : path) K.push_back(c);
  K.push_back(G.empty_set());

  const VertexSet Nv = G.neighbors(v) & S;
  auto between = [&](int a, int b) {
    VertexSet m = G.empty_set();
    for (int j = a + 1; j < b; ++j) m |= K[j];
    return m - (K[a] | K[b]);
  };
  auto nbr = [&](const VertexSet& X) { return G.neighborhood(X) & S; };

  std::vector<IntervalCandidate> out;
  for (int a = 0; a <= l; ++a) {
    VertexSet drop = ((K[a] & K[a + 1]) - Nv) | (Nv - (K[a] | K[a + 1]));
    out.push_back({1, a, a + 1, S - drop});
  }
  for (int a = 1; a + 2 <= l + 1; ++a)
    for (int b = a + 2; b <= l + 1; ++b) {
      VertexSet drop = ((K[a] & K[b]) - Nv) | (Nv - K[a]) | between(a, b) |
                       ((K[b] - K[a]) & nbr(K[a] - K[b]));
      out.push_back({2, a, b, S - drop});
    }
  for (int a = 0; a + 2 <= l; ++a)
    for (int b = a + 2; b <= l; ++b) {
      VertexSet drop = ((K[a] & K[b]) - Nv) | (Nv - K[b]) | between(a, b) |
                       ((K[a] - K[b]) & nbr(K[b] - K[a]));
      out.push_back({3, a, b, S - drop});
    }
  return out;
}

void interval_successors(const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v,
                         StepCounter& steps, std::vector<VertexSet>& out) {
  const ClassSpec& spec = interval_spec();
  std::unordered_set<VertexSet> seeds, done;
  for (IntervalCandidate& c : interval_candidates(G, W, S, v)) {
    steps.tick();
    VertexSet seed = component_of(G, c.set.with(v), v);
    if (!seeds.insert(seed).second) continue;
    if (!member(spec, Variant::Connected, G, seed, steps))
      throw ContractViolation("interval successor: succ" + std::to_string(c.rule) + " at (" +
                              std::to_string(c.a) + "," + std::to_string(c.b) + ") seed " +
                              seed.to_string() + " is not an interval set");
    VertexSet sol = extend(spec, Variant::Connected, G, seed, W, steps);
    if (done.insert(sol).second) out.push_back(std::move(sol));
  }
}

std::vector<VertexSet> interval_successors(const Graph& G, const VertexSet& S, Vertex v) {
  StepCounter steps;
  std::vector<VertexSet> out;
  interval_successors(G, G.vertices(), S, v, steps, out);
  return out;
}

std::unique_ptr<Enumerator> interval_enumerate(std::shared_ptr<const Graph> G, Variant variant,
                                               std::optional<std::size_t> limit, bool checked) {
  SuccessorFn succ = [](const Graph& H, const VertexSet& W, const VertexSet& S, Vertex v,
                        StepCounter& steps, std::vector<VertexSet>& out) {
    interval_successors(H, W, S, v, steps, out);
  };
  return solution_map_enumerate(interval_spec(), std::move(succ), std::move(G), variant, limit,
                                checked);
}

}  // namespace heredenum
