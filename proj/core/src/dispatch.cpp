#include "heredenum/dispatch.hpp"

#include <algorithm>

#include "heredenum/cks.hpp"
#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/lift.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/reductions.hpp"
#include "heredenum/restricted_solvers.hpp"
#include "heredenum/succ_interval.hpp"
#include "heredenum/succ_tp.hpp"

namespace heredenum {

namespace {

bool has_solution_map(const ClassSpec& spec) {
  return spec.kind == ClassKind::TriviallyPerfect || spec.kind == ClassKind::Interval;
}

SuccessorFn map_successor(const ClassSpec& spec) {
  if (spec.kind == ClassKind::TriviallyPerfect)
    return [](const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v,
              StepCounter& steps, std::vector<VertexSet>& out) {
      tp_successors(G, W, S, v, steps, out);
    };
  return [](const Graph& G, const VertexSet& W, const VertexSet& S, Vertex v, StepCounter& steps,
            std::vector<VertexSet>& out) { interval_successors(G, W, S, v, steps, out); };
}

// The traversal of a connected solution map over G[W], run to completion.
std::vector<VertexSet> map_run(const ClassSpec& spec, const SuccessorFn& succ, const Graph& G,
                               const VertexSet& W, StepCounter& steps) {
  std::vector<VertexSet> seeds;
  for (const VertexSet& C : components(G, W)) {
    VertexSet s = G.empty_set();
    s.insert(C.front());
    seeds.push_back(extend(spec, Variant::Connected, G, s, W, steps));
  }
  return Traversal(G, W, Variant::Connected, succ, std::move(seeds)).run(steps);
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::Delay:
      return "delay";
    case Mode::Incremental:
      return "incremental";
    case Mode::Oracle:
      return "oracle";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& name) {
  for (Mode m : {Mode::Delay, Mode::Incremental, Mode::Oracle})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

std::vector<Mode> supported_modes(const ClassSpec& spec) {
  std::vector<Mode> out;
  if (has_cks_base(spec) || has_solution_map(spec)) out.push_back(Mode::Delay);
  out.push_back(Mode::Incremental);
  out.push_back(Mode::Oracle);
  return out;
}

bool supports(const ClassSpec& spec, Mode mode) {
  auto modes = supported_modes(spec);
  return std::find(modes.begin(), modes.end(), mode) != modes.end();
}

TotalSolver total_solver(const ClassSpec& spec, Variant variant) {
  if (has_solution_map(spec)) {
    SuccessorFn succ = map_successor(spec);
    if (variant == Variant::Connected)
      return [spec, succ](const Graph& G, const VertexSet& W, StepCounter& steps) {
        return map_run(spec, succ, G, W, steps);
      };
    return [spec, succ](const Graph& G, const VertexSet& W, StepCounter& steps) {
      Gadget g = universalize(spec, G);
      std::vector<VertexSet> out;
      for (const VertexSet& S : map_run(spec, succ, g.graph, g.embed(W), steps))
        out.push_back(g.strip(S));
      return out;
    };
  }
  RestrictedSolver base;
  if (has_cks_base(spec)) {
    RestrictedSolver top = lift_to(cks_base(spec, variant), 0, spec, variant);
    return [top](const Graph& G, const VertexSet& W, StepCounter& steps) {
      return top.solve(G, W, G.empty_set(), steps);
    };
  } else {
    switch (spec.kind) {
      case ClassKind::Chordal:
      case ClassKind::UnitInterval:
      case ClassKind::Block:
      case ClassKind::ThreeLeafPower:
      case ClassKind::BasicFourLeafPower:
      case ClassKind::Forest:
        base = chordal_like_solver(spec, Variant::General);
        break;
      case ClassKind::WheelFree:
        base = wheel_free_solver(Variant::General);
        break;
      case ClassKind::FiniteForbidden:
        base = finite_f_solver(spec, Variant::General);
        break;
      default:
        throw ConfigurationError(spec.name() + " has no total-time solver");
    }
  }
  RestrictedSolver top = lift_stack(std::move(base), 0, spec, variant);
  return [top](const Graph& G, const VertexSet& W, StepCounter& steps) {
    return top.solve(G, W, G.empty_set(), steps);
  };
}

std::unique_ptr<Enumerator> enumerate(const ClassSpec& spec, Variant variant,
                                      std::shared_ptr<const Graph> G, Mode mode,
                                      const EnumerateOptions& options) {
  if (!supports(spec, mode)) {
    std::string list;
    for (Mode m : supported_modes(spec)) list += (list.empty() ? "" : ", ") + mode_name(m);
    throw ConfigurationError(spec.name() + " does not support mode " + mode_name(mode) +
                             "; supported modes: " + list);
  }
  if (G->order() == 0) return std::make_unique<ListEnumerator>(std::vector<VertexSet>{});
  switch (mode) {
    case Mode::Oracle:
      return std::make_unique<ListEnumerator>(brute_force_enumerate(spec, variant, *G),
                                              options.limit);
    case Mode::Incremental:
      return incremental_enumerator(spec, variant, std::move(G), total_solver(spec, variant),
                                    options.next, options.limit);
    case Mode::Delay:
      break;
  }
  if (spec.kind == ClassKind::TriviallyPerfect)
    return tp_enumerate(std::move(G), variant, options.limit, options.checked);
  if (spec.kind == ClassKind::Interval)
    return interval_enumerate(std::move(G), variant, options.limit, options.checked);
  return cohen_lift(cks_base(spec, variant), spec, variant, std::move(G), options.limit);
}

}  // namespace heredenum
