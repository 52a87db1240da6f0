#pragma once

#include <memory>
#include <optional>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"

namespace heredenum {

// Traverses a connected solution map. Connected variant: one seed per
// component, the extension of its smallest vertex. General variant: the
// connected variant on G plus a universal vertex, which is then stripped;
// the class must be closed under adding universal vertices. With `checked`,
// every successor is verified to be a solution.
std::unique_ptr<Enumerator> solution_map_enumerate(const ClassSpec& spec, SuccessorFn succ,
                                                   std::shared_ptr<const Graph> G, Variant variant,
                                                   std::optional<std::size_t> limit = std::nullopt,
                                                   bool checked = false);

}  // namespace heredenum
