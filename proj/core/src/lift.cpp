#include "heredenum/lift.hpp"

#include <algorithm>
#include <unordered_set>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/reductions.hpp"

namespace heredenum {

namespace {

struct Plan {
  std::vector<VertexSet> fixed;  // already final
  bool traverse = false;
  std::vector<VertexSet> seeds;
};

std::vector<VertexSet> lift_solve(const RestrictedSolver& inner, const ClassSpec& spec,
                                  Variant variant, const Graph& G, const VertexSet& W,
                                  const VertexSet& Z, StepCounter& steps);

std::vector<VertexSet> successor_pieces(const RestrictedSolver& inner, const ClassSpec& spec,
                                        Variant variant, const Graph& G, const VertexSet& W,
                                        const VertexSet& Z, const VertexSet& U, Vertex v,
                                        StepCounter& steps) {
  if (!Z.is_subset_of(U)) {
    // No forbidden set of G[U] can avoid Z, so G[U] has none.
    if (!member(spec, G, U, steps))
      throw ContractViolation("restricted instance has a forbidden set missing Z");
    if (variant == Variant::General) return {U};
    return components(G, U);
  }
  if (!Z.contains(v)) return inner.solve(G, U, Z.with(v), steps);
  // v ∈ Z: (G[U], Z) is an instance of the current level.
  if (member(spec, G, U, steps)) return components(G, U);
  if (U == W) return {};
  return lift_solve(inner, spec, variant, G, U, Z, steps);
}

Plan plan(const ClassSpec& spec, Variant variant, const Graph& G, const VertexSet& W,
          const VertexSet& Z, StepCounter& steps) {
  Plan p;
  if (member(spec, G, W, steps)) {
    if (variant == Variant::General) {
      p.fixed.push_back(W);
    } else {
      p.fixed = components(G, W);
    }
    return p;
  }
  std::vector<VertexSet> nz = not_z_solutions(spec, variant, G, W, Z, steps);
  if (!member(spec, G, Z, steps)) {
    p.fixed = std::move(nz);
    return p;
  }
  bool z_maximal = true;
  for (Vertex x : W - Z) {
    if (member(spec, G, Z.with(x), steps)) {
      z_maximal = false;
      break;
    }
  }
  if (z_maximal) {
    p.fixed = std::move(nz);
    if (variant == Variant::General || is_connected(G, Z)) p.fixed.push_back(Z);
    return p;
  }
  p.traverse = true;
  if (variant == Variant::General) {
    p.fixed = std::move(nz);
    p.seeds.push_back(extend(spec, variant, G, Z, W, steps));
  } else {
    p.seeds = std::move(nz);
    for (const VertexSet& C : components(G, W))
      p.seeds.push_back(extend(spec, variant, G, VertexSet(G.order(), {C.front()}), W, steps));
  }
  return p;
}

std::vector<VertexSet> lift_solve(const RestrictedSolver& inner, const ClassSpec& spec,
                                  Variant variant, const Graph& G, const VertexSet& W,
                                  const VertexSet& Z, StepCounter& steps) {
  Plan p = plan(spec, variant, G, W, Z, steps);
  if (!p.traverse) return std::move(p.fixed);
  Traversal t(G, W, variant, lift_successor(inner, spec, variant, Z), std::move(p.seeds));
  std::vector<VertexSet> out = std::move(p.fixed);
  while (auto s = t.next(steps)) out.push_back(std::move(*s));
  return out;
}

}  // namespace

SuccessorFn lift_successor(RestrictedSolver inner, ClassSpec spec, Variant variant, VertexSet Z) {
  return [inner = std::move(inner), spec = std::move(spec), variant, Z = std::move(Z)](
             const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v, StepCounter& steps,
             std::vector<VertexSet>& out) {
    VertexSet U = S.with(v);
    for (const VertexSet& piece : successor_pieces(inner, spec, variant, G, W, Z, U, v, steps)) {
      if (piece == S) continue;
      if (variant == Variant::Connected && piece.empty()) continue;
      VertexSet full = extend(spec, variant, G, piece, W, steps);
      // General supersets of Z are the traversed part; the rest were listed
      // up front.
      if (variant == Variant::General && !Z.is_subset_of(full)) continue;
      out.push_back(std::move(full));
    }
  };
}

RestrictedSolver lift_restricted(RestrictedSolver inner, ClassSpec spec, Variant variant) {
  if (inner.level == 0) throw PreconditionError("cannot lift a level-0 solver");
  if (variant == Variant::Connected && inner.level != 1)
    throw PreconditionError("connected lifts only produce level 0; use connected_from_general");
  RestrictedSolver out;
  out.level = inner.level - 1;
  out.solve = [inner = std::move(inner), spec = std::move(spec), variant](
                  const Graph& G, const VertexSet& W, const VertexSet& Z, StepCounter& steps) {
    if (Z.size() != inner.level - 1)
      throw PreconditionError("restriction set has the wrong size for this level");
    return lift_solve(inner, spec, variant, G, W, Z, steps);
  };
  return out;
}

RestrictedSolver lift_to(RestrictedSolver solver, std::size_t level, const ClassSpec& spec,
                         Variant variant) {
  if (level > solver.level) throw PreconditionError("cannot lift to a higher level");
  while (solver.level > level) solver = lift_restricted(std::move(solver), spec, variant);
  return solver;
}

RestrictedSolver connected_from_general(RestrictedSolver general, ClassSpec spec) {
  if (general.level == 0) throw PreconditionError("connected_from_general needs level >= 1");
  RestrictedSolver s;
  s.level = general.level;
  s.solve = [general = std::move(general), spec = std::move(spec)](
                const Graph& G, const VertexSet& W, const VertexSet& Z, StepCounter& steps) {
    std::vector<VertexSet> out = not_z_solutions(spec, Variant::Connected, G, W, Z, steps);
    if (member(spec, G, W, steps)) return out;
    std::unordered_set<VertexSet> seen(out.begin(), out.end());
    for (const VertexSet& T : general.solve(G, W, Z, steps)) {
      if (!Z.is_subset_of(T)) continue;
      VertexSet C = component_of(G, T, Z.front());
      if (!Z.is_subset_of(C) || seen.count(C)) continue;
      bool maximal = true;
      for (Vertex x : G.neighborhood(C) & W)
        if (member(spec, G, C.with(x), steps)) {
          maximal = false;
          break;
        }
      if (maximal) {
        seen.insert(C);
        out.push_back(std::move(C));
      }
    }
    return out;
  };
  return s;
}

RestrictedSolver lift_stack(RestrictedSolver general, std::size_t level, const ClassSpec& spec,
                            Variant variant) {
  if (variant == Variant::General) return lift_to(std::move(general), level, spec, variant);
  RestrictedSolver top = connected_from_general(
      lift_to(std::move(general), std::max<std::size_t>(level, 1), spec, Variant::General), spec);
  if (level == 0) return lift_restricted(std::move(top), spec, Variant::Connected);
  return top;
}

namespace {

class LiftedEnumerator : public Enumerator {
 public:
  LiftedEnumerator(RestrictedSolver inner, ClassSpec spec, Variant variant,
                   std::shared_ptr<const Graph> G, std::optional<std::size_t> limit)
      : Enumerator(limit),
        inner_(std::move(inner)),
        spec_(std::move(spec)),
        variant_(variant),
        G_(std::move(G)) {}

 protected:
  std::optional<VertexSet> produce() override {
    if (!started_) {
      started_ = true;
      VertexSet W = G_->vertices();
      VertexSet Z = G_->empty_set();
      Plan p = plan(spec_, variant_, *G_, W, Z, counter());
      fixed_ = std::move(p.fixed);
      if (p.traverse)
        traversal_ = std::make_unique<Traversal>(
            *G_, W, variant_, lift_successor(inner_, spec_, variant_, Z), std::move(p.seeds));
    }
    if (pos_ < fixed_.size()) return fixed_[pos_++];
    if (traversal_) return traversal_->next(counter());
    return std::nullopt;
  }

 private:
  RestrictedSolver inner_;
  ClassSpec spec_;
  Variant variant_;
  std::shared_ptr<const Graph> G_;
  bool started_ = false;
  std::vector<VertexSet> fixed_;
  std::size_t pos_ = 0;
  std::unique_ptr<Traversal> traversal_;
};

}  // namespace

std::unique_ptr<Enumerator> lifted_enumerator(RestrictedSolver level1, const ClassSpec& spec,
                                              Variant variant, std::shared_ptr<const Graph> G,
                                              std::optional<std::size_t> limit) {
  if (level1.level != 1) throw PreconditionError("lifted_enumerator needs a level-1 solver");
  return std::make_unique<LiftedEnumerator>(std::move(level1), spec, variant, std::move(G), limit);
}

}  // namespace heredenum
