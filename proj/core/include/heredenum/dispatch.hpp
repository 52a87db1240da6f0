#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/next.hpp"

namespace heredenum {

enum class Mode { Delay, Incremental, Oracle };

std::string mode_name(Mode mode);
std::optional<Mode> parse_mode(const std::string& name);

// Modes available for the class, in the order delay, incremental, oracle.
std::vector<Mode> supported_modes(const ClassSpec& spec);
bool supports(const ClassSpec& spec, Mode mode);

struct EnumerateOptions {
  std::optional<std::size_t> limit;
  NextOptions next;      // incremental mode
  bool checked = false;  // verify every successor (delay mode, solution maps)
};

// Total-time solver used by incremental mode: all maximal (connected) P sets
// of G[W]. Throws ConfigurationError when the class has none.
TotalSolver total_solver(const ClassSpec& spec, Variant variant);

// Stream of all maximal (connected) P sets of G in the requested mode.
// Unsupported pairs throw ConfigurationError naming the supported modes.
std::unique_ptr<Enumerator> enumerate(const ClassSpec& spec, Variant variant,
                                      std::shared_ptr<const Graph> G, Mode mode,
                                      const EnumerateOptions& options = {});

}  // namespace heredenum
