#include "heredenum/restricted_solvers.hpp"

#include <unordered_set>
#include <variant>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/reductions.hpp"

namespace heredenum {

namespace {

std::vector<VertexSet> trivial(Variant variant, const Graph& G, const VertexSet& W) {
  if (variant == Variant::General) return {W};
  return components(G, W);
}

void check_level(const VertexSet& Z, std::size_t t, const char* who) {
  if (Z.size() != t)
    throw PreconditionError(std::string(who) + ": restriction set must have " +
                            std::to_string(t) + " vertices, got " + std::to_string(Z.size()));
}

const ClassSpec& chordal_spec() {
  static const ClassSpec spec = ClassSpec::of(ClassKind::Chordal);
  return spec;
}

const ClassSpec& wheel_free_spec() {
  static const ClassSpec spec = ClassSpec::of(ClassKind::WheelFree);
  return spec;
}

const ClassSpec& forest_spec() {
  static const ClassSpec spec = ClassSpec::of(ClassKind::Forest);
  return spec;
}

}  // namespace

// ---- finite families --------------------------------------------------------

std::vector<VertexSet> finite_f_restricted(const ClassSpec& spec, Variant variant, const Graph& G,
                                           const VertexSet& W, const VertexSet& Z,
                                           StepCounter& steps) {
  const ClassCapabilities& caps = capabilities(spec);
  if (!caps.finite) throw ConfigurationError(spec.name() + " has no finite forbidden family");
  check_level(Z, caps.small_order, "finite_f_restricted");
  // Either G[W] is in the class, or Z is its only forbidden set.
  return not_z_solutions(spec, variant, G, W, Z, steps);
}

RestrictedSolver finite_f_solver(const ClassSpec& spec, Variant variant) {
  const ClassCapabilities& caps = capabilities(spec);
  if (!caps.finite) throw ConfigurationError(spec.name() + " has no finite forbidden family");
  RestrictedSolver s;
  s.level = caps.small_order;
  s.solve = [spec, variant](const Graph& G, const VertexSet& W, const VertexSet& Z,
                            StepCounter& steps) {
    return finite_f_restricted(spec, variant, G, W, Z, steps);
  };
  return s;
}

// ---- chordal ------------------------------------------------------------------

ChordalRestrictedAnalysis analyze_chordal_restricted(const Graph& G, const VertexSet& W,
                                                     const VertexSet& Z) {
  ChordalRestrictedAnalysis a;
  a.pruned = G.empty_set();
  for (Vertex x : W)
    if (!vertex_in_hole(G, W, x)) a.pruned.insert(x);
  a.core = W - a.pruned;
  if (!Z.is_subset_of(a.core))
    throw ContractViolation("chordal 3-restricted: some vertex of Z lies in no hole");
  a.z_edges = edge_count(G, Z);
  std::vector<VertexSet> comps = components(G, a.core - Z);
  if (a.z_edges > 2 || comps.size() != 3 - a.z_edges)
    throw ContractViolation("chordal 3-restricted clause (i): G - Z has " +
                            std::to_string(comps.size()) + " components, expected 3 - " +
                            std::to_string(a.z_edges));
  for (VertexSet& C : comps) {
    VertexSet att = G.neighborhood(C) & Z;
    if (att.size() != 2)
      throw ContractViolation("chordal 3-restricted clause (ii): a component of G - Z has " +
                              std::to_string(att.size()) + " attachments in Z");
    std::vector<Vertex> ab = att.to_vector();
    if (G.adjacent(ab[0], ab[1]))
      throw ContractViolation("chordal 3-restricted clause (ii): attachments are adjacent");
    a.pieces.push_back({std::move(C), ab[0], ab[1]});
  }
  return a;
}

std::vector<VertexSet> minimal_chordal_separators(const Graph& G, const VertexSet& U, Vertex a,
                                                  Vertex b) {
  auto cert = chordal_certificates(G, U);
  if (!std::holds_alternative<ChordalCertificate>(cert))
    throw ContractViolation("separator search on a non-chordal graph");
  auto separates = [&](const VertexSet& Y) {
    return !component_of(G, U - Y, a).contains(b);
  };
  if (separates(G.empty_set())) return {G.empty_set()};
  std::vector<VertexSet> out;
  for (const VertexSet& Y : std::get<ChordalCertificate>(cert).minimal_separators) {
    if (Y.contains(a) || Y.contains(b) || !separates(Y)) continue;
    bool minimal = true;
    for (Vertex y : Y)
      if (separates(Y.without(y))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(Y);
  }
  return out;
}

std::vector<VertexSet> chordal_restricted3(Variant variant, const Graph& G, const VertexSet& W,
                                           const VertexSet& Z, StepCounter& steps) {
  const ClassSpec& spec = chordal_spec();
  check_level(Z, 3, "chordal_restricted3");
  if (member(spec, G, W, steps)) return trivial(variant, G, W);
  std::vector<VertexSet> general = not_z_solutions(spec, Variant::General, G, W, Z, steps);
  ChordalRestrictedAnalysis an = analyze_chordal_restricted(G, W, Z);
  // Every hole runs through every piece, so cutting one piece between its two
  // attachments breaks them all.
  for (const auto& piece : an.pieces) {
    VertexSet H = piece.component.with(piece.a).with(piece.b);
    for (const VertexSet& Y : minimal_chordal_separators(G, H, piece.a, piece.b)) {
      steps.tick();
      general.push_back(W - Y);
    }
  }
  if (variant == Variant::General) return general;
  return connected_solutions_from_general(spec, G, W, Z, general, steps);
}

RestrictedSolver chordal_restricted3_solver(Variant variant) {
  RestrictedSolver s;
  s.level = 3;
  s.solve = [variant](const Graph& G, const VertexSet& W, const VertexSet& Z,
                      StepCounter& steps) { return chordal_restricted3(variant, G, W, Z, steps); };
  return s;
}

std::vector<VertexSet> chordal_like_restricted(const ClassSpec& spec, Variant variant,
                                               const Graph& G, const VertexSet& W,
                                               const VertexSet& Z, StepCounter& steps) {
  if (spec.kind == ClassKind::Chordal) return chordal_restricted3(variant, G, W, Z, steps);
  const ClassCapabilities& caps = capabilities(spec);
  if (!caps.forbids_holes || caps.small_forbidden.empty())
    throw ConfigurationError(spec.name() + " is not chordal with a finite extra family");
  check_level(Z, caps.small_order, "chordal_like_restricted");
  if (member(spec, G, W, steps)) return trivial(variant, G, W);
  // A forbidden set of order <= |Z| containing Z is Z itself and then it is
  // the only one.
  if (!member(spec, G, Z, steps)) return not_z_solutions(spec, variant, G, W, Z, steps);
  // Only holes are left; inside G[W] the class agrees with chordality.
  std::vector<Vertex> z = Z.to_vector();
  VertexSet z3(G.order(), {z[0], z[1], z[2]});
  return chordal_restricted3(variant, G, W, z3, steps);
}

RestrictedSolver chordal_like_solver(const ClassSpec& spec, Variant variant) {
  if (spec.kind == ClassKind::Chordal) return chordal_restricted3_solver(variant);
  const ClassCapabilities& caps = capabilities(spec);
  if (!caps.forbids_holes || caps.small_order < 3)
    throw ConfigurationError(spec.name() + " is not chordal with a finite extra family");
  RestrictedSolver s;
  s.level = caps.small_order;
  s.solve = [spec, variant](const Graph& G, const VertexSet& W, const VertexSet& Z,
                            StepCounter& steps) {
    return chordal_like_restricted(spec, variant, G, W, Z, steps);
  };
  return s;
}

// ---- wheel-free ---------------------------------------------------------------

std::vector<VertexSet> maximal_forests(const Graph& G, const VertexSet& W) {
  return brute_force_enumerate(forest_spec(), Variant::General, G, W);
}

std::vector<VertexSet> maximal_forests(const Graph& G) { return maximal_forests(G, G.vertices()); }

std::vector<VertexSet> wheel_free_restricted5(Variant variant, const Graph& G, const VertexSet& W,
                                              const VertexSet& Z, StepCounter& steps,
                                              const ForestEnumerator& forests_in) {
  const ClassSpec& spec = wheel_free_spec();
  ForestEnumerator forests = forests_in;
  if (!forests)
    forests = [](const Graph& H, const VertexSet& U) { return maximal_forests(H, U); };
  check_level(Z, 5, "wheel_free_restricted5");
  if (member(spec, G, W, steps)) return trivial(variant, G, W);
  WheelRoles roles = wheel_roles(G, W);
  VertexSet R = roles.in_wheel & W;
  VertexSet pruned = W - R;
  if (!Z.is_subset_of(R))
    throw ContractViolation("wheel-free 5-restricted: some vertex of Z lies in no wheel");

  std::vector<VertexSet> general;
  std::optional<Vertex> hub;
  for (Vertex u : Z)
    if ((Z.without(u)).is_subset_of(G.neighbors(u))) {
      hub = u;
      break;
    }
  if (hub) {
    // The hub is the center of every wheel.
    general.push_back(W.without(*hub));
    for (const VertexSet& F : forests(G, R.without(*hub))) {
      steps.tick();
      general.push_back(F.with(*hub) | pruned);
    }
  } else {
    VertexSet A = roles.centers & R;
    VertexSet B = roles.rims & R;
    if (A.intersects(B) || (A | B) != R)
      throw ContractViolation("wheel-free 5-restricted: centers and rims do not partition");
    if (!Z.is_subset_of(B))
      throw ContractViolation("wheel-free 5-restricted: Z contains a center");
    std::unordered_set<VertexSet> seen{B};
    std::vector<VertexSet> tree{B};
    for (std::size_t i = 0; i < tree.size(); ++i) {
      VertexSet S = tree[i];
      for (Vertex c : A - S) {
        VertexSet Bp = cycle_vertices(G, S & G.neighbors(c));
        for (const VertexSet& F : forests(G, Bp)) {
          steps.tick();
          VertexSet seed = (S - Bp) | F;
          seed.insert(c);
          VertexSet sol = extend(spec, Variant::General, G, seed, R, steps);
          if (seen.insert(sol).second) tree.push_back(std::move(sol));
        }
      }
    }
    for (const VertexSet& S : tree) general.push_back(S | pruned);
  }
  if (variant == Variant::General) return general;
  return connected_solutions_from_general(spec, G, W, Z, general, steps);
}

RestrictedSolver wheel_free_solver(Variant variant, ForestEnumerator forests) {
  RestrictedSolver s;
  s.level = 5;
  s.solve = [variant, forests = std::move(forests)](const Graph& G, const VertexSet& W,
                                                    const VertexSet& Z, StepCounter& steps) {
    return wheel_free_restricted5(variant, G, W, Z, steps, forests);
  };
  return s;
}

}  // namespace heredenum
