#include "heredenum/cks.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <utility>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/reductions.hpp"
#include "heredenum/restricted_solvers.hpp"
#include "heredenum/small_graphs.hpp"

namespace heredenum {

namespace {

const ClassSpec& spec_of(ClassKind kind) {
  static const ClassSpec edgeless = ClassSpec::of(ClassKind::Edgeless);
  static const ClassSpec clique = ClassSpec::of(ClassKind::Clique);
  static const ClassSpec cluster = ClassSpec::of(ClassKind::Cluster);
  static const ClassSpec split = ClassSpec::of(ClassKind::Split);
  static const ClassSpec pseudo = ClassSpec::of(ClassKind::PseudoSplit);
  switch (kind) {
    case ClassKind::Edgeless:
      return edgeless;
    case ClassKind::Clique:
      return clique;
    case ClassKind::Cluster:
      return cluster;
    case ClassKind::Split:
      return split;
    case ClassKind::PseudoSplit:
      return pseudo;
    default:
      throw std::logic_error("spec_of: unexpected kind");
  }
}

// Shared front matter: checks the precondition and reports the case where
// G[W] is already in the class.
bool settled(const ClassSpec& spec, const Graph& G, const VertexSet& W, Vertex v,
             StepCounter& steps, std::vector<VertexSet>& out) {
  if (!W.contains(v)) throw PreconditionError("restricted vertex is not in the instance");
  if (member(spec, G, W, steps)) {
    out.push_back(W);
    return true;
  }
  if (!member(spec, G, W.without(v), steps))
    throw PreconditionError(spec.name() + ": G - v is not in the class");
  return false;
}

// Keeps candidates that are maximal P sets of G[W], without repeats, in
// first-seen order.
std::vector<VertexSet> keep_solutions(const ClassSpec& spec, const Graph& G, const VertexSet& W,
                                      const std::vector<VertexSet>& candidates,
                                      StepCounter& steps) {
  std::vector<VertexSet> out;
  std::unordered_set<VertexSet> seen;
  for (const VertexSet& U : candidates) {
    if (!U.is_subset_of(W) || seen.count(U)) continue;
    seen.insert(U);
    if (!member(spec, G, U, steps)) continue;
    bool maximal = true;
    for (Vertex x : W - U)
      if (member(spec, G, U.with(x), steps)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(U);
  }
  return out;
}

bool is_clique(const Graph& G, const VertexSet& U) {
  for (Vertex x : U)
    if (!(U.without(x)).is_subset_of(G.neighbors(x))) return false;
  return true;
}

bool is_independent(const Graph& G, const VertexSet& U) {
  for (Vertex x : U)
    if (G.neighbors(x).intersects(U)) return false;
  return true;
}

// Split partition of G[U] with C a maximal clique.
std::pair<VertexSet, VertexSet> split_partition(const Graph& G, const VertexSet& U) {
  std::vector<Vertex> order = U.to_vector();
  auto deg = [&](Vertex x) { return (G.neighbors(x) & U).size(); };
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return deg(a) > deg(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (deg(order[i]) + 1 >= i + 1) m = i + 1;
  VertexSet C(G.order()), I(G.order());
  for (std::size_t i = 0; i < order.size(); ++i) (i < m ? C : I).insert(order[i]);
  for (Vertex x : I)
    if (C.is_subset_of(G.neighbors(x))) {
      C.insert(x);
      I.erase(x);
      break;
    }
  if (!is_clique(G, C) || !is_independent(G, I))
    throw ContractViolation("split partition failed on a graph expected to be split");
  return {C, I};
}

void split_candidates(const Graph& G, const VertexSet& C, const VertexSet& I, Vertex v,
                      std::vector<VertexSet>& out) {
  const VertexSet& Nv = G.neighbors(v);
  // Case 1: the clique stays C.
  out.push_back(C | I);
  out.push_back((C | (I - Nv)).with(v));
  // Case 2: v joins its neighbors in C.
  VertexSet C2 = (Nv & C).with(v);
  out.push_back(C2 | I);
  for (Vertex u : C - C2) out.push_back((C2 | (I - G.neighbors(u))).with(u));
  // Case 3: v and a neighbor u in I.
  for (Vertex u : I & Nv) {
    VertexSet C3 = (Nv & G.neighbors(u) & C).with(v).with(u);
    out.push_back(C3 | I.without(u));
    for (Vertex w : C - C3) out.push_back((C3 | (I - G.neighbors(w)).without(u)).with(w));
  }
  // Case 4: the clique is built around u in I; v goes to the independent side.
  for (Vertex u : I) {
    VertexSet C4 = (G.neighbors(u) & C).with(u);
    for (Vertex w : C - (G.neighbors(u) | Nv))
      out.push_back((C4 | (I - (G.neighbors(w) | Nv))).with(v).with(w));
    out.push_back((C4 | (I.without(u) - Nv)).with(v));
  }
}

bool is_pentagon(const Graph& G, const VertexSet& S) {
  if (S.size() != 5) return false;
  for (Vertex x : S)
    if ((G.neighbors(x) & S).size() != 2) return false;
  return is_connected(G, S);
}

// Candidates of G[Wsub] when G[Wsub - v] is split: split-style sets plus
// every pentagon through v with two vertices on each side.
void pentagon_free_candidates(const Graph& G, const VertexSet& Wsub, Vertex v,
                              std::vector<VertexSet>& out) {
  auto [C, I] = split_partition(G, Wsub.without(v));
  split_candidates(G, C, I, v, out);
  std::vector<Vertex> cs = C.to_vector();
  std::vector<Vertex> is = I.to_vector();
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      for (std::size_t c = 0; c < is.size(); ++c)
        for (std::size_t d = c + 1; d < is.size(); ++d) {
          VertexSet P(G.order(), {v, cs[a], cs[b], is[c], is[d]});
          if (!is_pentagon(G, P)) continue;
          VertexSet U = P;
          for (Vertex x : C - P)
            if (P.is_subset_of(G.neighbors(x))) U.insert(x);
          for (Vertex x : I - P)
            if (!G.neighbors(x).intersects(P)) U.insert(x);
          out.push_back(U);
        }
}

void degree_branch(int d, const Graph& G, const VertexSet& D, Vertex v, VertexSet cur,
                   std::vector<VertexSet>& out) {
  for (Vertex u : D & cur) {
    VertexSet nu = G.neighbors(u) & cur;
    if (nu.size() <= static_cast<std::size_t>(d)) continue;
    for (Vertex w : nu.without(v)) degree_branch(d, G, D, v, cur.without(w), out);
    return;
  }
  out.push_back(std::move(cur));
}

void subsets_up_to(const std::vector<Vertex>& items, std::size_t k, std::size_t start,
                   std::vector<Vertex>& pick, const std::function<void()>& visit) {
  visit();
  if (pick.size() == k) return;
  for (std::size_t i = start; i < items.size(); ++i) {
    pick.push_back(items[i]);
    subsets_up_to(items, k, i + 1, pick, visit);
    pick.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> edgeless_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                           StepCounter& steps) {
  const ClassSpec& spec = spec_of(ClassKind::Edgeless);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  return keep_solutions(spec, G, W, {W.without(v), W - G.neighbors(v)}, steps);
}

std::vector<VertexSet> clique_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                         StepCounter& steps) {
  const ClassSpec& spec = spec_of(ClassKind::Clique);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  return keep_solutions(spec, G, W, {W.without(v), (W & G.neighbors(v)).with(v)}, steps);
}

std::vector<VertexSet> cluster_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                          StepCounter& steps) {
  const ClassSpec& spec = spec_of(ClassKind::Cluster);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  VertexSet Nv = G.neighbors(v) & W;
  std::vector<VertexSet> cand{W.without(v)};
  for (const VertexSet& K : components(G, W.without(v))) cand.push_back(W - ((K - Nv) | (Nv - K)));
  cand.push_back(W - Nv);
  return keep_solutions(spec, G, W, cand, steps);
}

std::vector<VertexSet> split_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                        StepCounter& steps) {
  const ClassSpec& spec = spec_of(ClassKind::Split);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  auto [C, I] = split_partition(G, W.without(v));
  std::vector<VertexSet> cand;
  split_candidates(G, C, I, v, cand);
  return keep_solutions(spec, G, W, cand, steps);
}

std::vector<VertexSet> pseudo_split_restricted(const Graph& G, const VertexSet& W, Vertex v,
                                               StepCounter& steps) {
  const ClassSpec& spec = spec_of(ClassKind::PseudoSplit);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  static const Graph c5 = graphs::cycle(5);
  std::vector<VertexSet> cand{W.without(v)};
  std::optional<VertexSet> S = find_induced(c5, G, W.without(v));
  if (!S) {
    pentagon_free_candidates(G, W, v, cand);
  } else {
    // The pentagon of G - v is unique; solutions missing one of its vertices
    // live in a graph whose v-deletion is split.
    for (Vertex x : *S) {
      VertexSet Wx = W.without(x);
      if (member(spec, G, Wx, steps)) {
        cand.push_back(Wx);
      } else {
        pentagon_free_candidates(G, Wx, v, cand);
      }
    }
    VertexSet C(G.order());
    for (Vertex x : W.without(v) - *S)
      if (S->is_subset_of(G.neighbors(x))) C.insert(x);
    VertexSet I = W.without(v) - *S - C;
    const VertexSet& Nv = G.neighbors(v);
    if (S->is_subset_of(Nv)) cand.push_back((C & Nv).with(v) | *S | I);
    if (!S->intersects(Nv)) cand.push_back(C | *S | (I - Nv).with(v));
  }
  return keep_solutions(spec, G, W, cand, steps);
}

std::vector<VertexSet> degree_restricted(int d, const Graph& G, const VertexSet& W, Vertex v,
                                         StepCounter& steps) {
  if (d < 0) throw PreconditionError("degree bound must be non-negative");
  ClassSpec spec = ClassSpec::degree_bounded(d);
  std::vector<VertexSet> out;
  if (settled(spec, G, W, v, steps, out)) return out;
  VertexSet Nv = G.neighbors(v) & W;
  std::vector<Vertex> nbrs = Nv.to_vector();
  std::vector<VertexSet> cand{W.without(v)};
  std::vector<Vertex> pick;
  subsets_up_to(nbrs, static_cast<std::size_t>(d), 0, pick, [&] {
    VertexSet D(G.order(), pick);
    degree_branch(d, G, D, v, W - (Nv - D), cand);
  });
  return keep_solutions(spec, G, W, cand, steps);
}

std::vector<VertexSet> cluster_restricted(const Graph& G, Vertex v) {
  StepCounter steps;
  return cluster_restricted(G, G.vertices(), v, steps);
}

std::vector<VertexSet> split_restricted(const Graph& G, Vertex v) {
  StepCounter steps;
  return split_restricted(G, G.vertices(), v, steps);
}

std::vector<VertexSet> pseudo_split_restricted(const Graph& G, Vertex v) {
  StepCounter steps;
  return pseudo_split_restricted(G, G.vertices(), v, steps);
}

std::vector<VertexSet> degree_restricted(int d, const Graph& G, Vertex v) {
  StepCounter steps;
  return degree_restricted(d, G, G.vertices(), v, steps);
}

bool has_cks_base(const ClassSpec& spec) {
  switch (spec.kind) {
    case ClassKind::Edgeless:
    case ClassKind::Clique:
    case ClassKind::Cluster:
    case ClassKind::Split:
    case ClassKind::PseudoSplit:
    case ClassKind::DegreeBounded:
    case ClassKind::Threshold:
    case ClassKind::CompleteSplit:
    case ClassKind::CompletePPartite:
    case ClassKind::CompleteBipartite:
      return true;
    default:
      return false;
  }
}

RestrictedSolver connected_cks(RestrictedSolver general, ClassSpec spec) {
  return connected_from_general(std::move(general), std::move(spec));
}

RestrictedSolver cks_base(const ClassSpec& spec, Variant variant) {
  using Fn = std::function<std::vector<VertexSet>(const Graph&, const VertexSet&, Vertex,
                                                  StepCounter&)>;
  Fn fn;
  switch (spec.kind) {
    case ClassKind::Edgeless:
      fn = edgeless_restricted;
      break;
    case ClassKind::Clique:
      fn = clique_restricted;
      break;
    case ClassKind::Cluster:
      fn = static_cast<std::vector<VertexSet> (*)(const Graph&, const VertexSet&, Vertex,
                                                  StepCounter&)>(cluster_restricted);
      break;
    case ClassKind::Split:
      fn = static_cast<std::vector<VertexSet> (*)(const Graph&, const VertexSet&, Vertex,
                                                  StepCounter&)>(split_restricted);
      break;
    case ClassKind::PseudoSplit:
      fn = static_cast<std::vector<VertexSet> (*)(const Graph&, const VertexSet&, Vertex,
                                                  StepCounter&)>(pseudo_split_restricted);
      break;
    case ClassKind::DegreeBounded: {
      int d = spec.d;
      fn = [d](const Graph& G, const VertexSet& W, Vertex v, StepCounter& steps) {
        return degree_restricted(d, G, W, v, steps);
      };
      break;
    }
    case ClassKind::Threshold:
    case ClassKind::CompleteSplit:
    case ClassKind::CompletePPartite:
    case ClassKind::CompleteBipartite:
      return lift_stack(finite_f_solver(spec, Variant::General), 1, spec, variant);
    default:
      throw ConfigurationError(spec.name() + " has no input-restricted enumerator");
  }
  RestrictedSolver general;
  general.level = 1;
  general.solve = [fn](const Graph& G, const VertexSet& W, const VertexSet& Z,
                       StepCounter& steps) {
    if (Z.size() != 1) throw PreconditionError("level-1 solver needs a single restricted vertex");
    return fn(G, W, Z.front(), steps);
  };
  if (variant == Variant::General) return general;
  return connected_cks(std::move(general), spec);
}

std::unique_ptr<Enumerator> cohen_lift(RestrictedSolver base, const ClassSpec& spec,
                                       Variant variant, std::shared_ptr<const Graph> G,
                                       std::optional<std::size_t> limit) {
  return lifted_enumerator(std::move(base), spec, variant, std::move(G), limit);
}

}  // namespace heredenum
