#include "heredenum/solution_map.hpp"

#include "heredenum/extend.hpp"
#include "heredenum/reductions.hpp"

namespace heredenum {

namespace {

std::unique_ptr<Enumerator> connected_traversal(const ClassSpec& spec, SuccessorFn succ,
                                                std::shared_ptr<const Graph> G,
                                                std::optional<std::size_t> limit, bool checked) {
  VertexSet W = G->vertices();
  auto seeds = [spec, G](StepCounter& steps) {
    std::vector<VertexSet> out;
    for (const VertexSet& C : components(*G)) {
      VertexSet s(G->order());
      s.insert(C.front());
      out.push_back(extend(spec, Variant::Connected, *G, s, G->vertices(), steps));
    }
    return out;
  };
  SolutionCheck check;
  if (checked)
    check = [spec, G](const VertexSet& S) {
      return is_solution(spec, Variant::Connected, *G, S);
    };
  return std::make_unique<TraversalEnumerator>(G, W, Variant::Connected, std::move(succ),
                                               std::move(seeds), limit, std::move(check));
}

}  // namespace

std::unique_ptr<Enumerator> solution_map_enumerate(const ClassSpec& spec, SuccessorFn succ,
                                                   std::shared_ptr<const Graph> G, Variant variant,
                                                   std::optional<std::size_t> limit,
                                                   bool checked) {
  if (variant == Variant::Connected)
    return connected_traversal(spec, std::move(succ), std::move(G), limit, checked);
  auto gadget = std::make_shared<Gadget>(universalize(spec, *G));
  auto H = std::shared_ptr<const Graph>(gadget, &gadget->graph);
  auto inner = connected_traversal(spec, std::move(succ), H, std::nullopt, checked);
  return std::make_unique<MappedEnumerator>(
      std::move(inner),
      [gadget](const VertexSet& S) -> std::optional<VertexSet> { return gadget->strip(S); },
      limit);
}

}  // namespace heredenum
