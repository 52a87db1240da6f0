#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/graph.hpp"

namespace heredenum {

// Membership of G[U] in the class. Most callers want this form; it avoids
// building subgraphs.
bool in_class(const ClassSpec& spec, const Graph& G, const VertexSet& U);

// True iff G is in the class and, when flagged, connected.
bool recognize(const ClassSpec& spec, const Graph& G, bool connected_variant = false);

// ---- trivially perfect ------------------------------------------------------

struct GeneratingForest {
  static constexpr Vertex kRoot = static_cast<Vertex>(-1);

  VertexSet vertices;
  std::vector<Vertex> parent;       // kRoot for roots and for non-members
  std::vector<Vertex> order;        // postorder
  std::vector<VertexSet> ancestors;  // proper ancestors of each member

  bool is_ancestor(Vertex a, Vertex b) const { return ancestors[b].contains(a); }
  // Proper descendants of a.
  VertexSet descendants(Vertex a) const;
  Vertex lca(Vertex a, Vertex b) const;
};

struct NotTriviallyPerfect {
  VertexSet witness;  // a connected piece with no universal vertex
};

std::variant<GeneratingForest, NotTriviallyPerfect> build_generating_forest(
    const Graph& G, const VertexSet& U);
std::variant<GeneratingForest, NotTriviallyPerfect> build_generating_forest(const Graph& G);

// ---- chordal ------------------------------------------------------------------

struct ChordalCertificate {
  std::vector<Vertex> peo;
  std::vector<VertexSet> cliques;  // maximal cliques
  std::vector<std::pair<std::size_t, std::size_t>> clique_tree;  // edges over `cliques`
  std::vector<VertexSet> minimal_separators;
};

struct Hole {
  std::vector<Vertex> cycle;  // in cyclic order, length >= 4
};

std::variant<ChordalCertificate, Hole> chordal_certificates(const Graph& G, const VertexSet& U);
std::variant<ChordalCertificate, Hole> chordal_certificates(const Graph& G);

bool is_chordal(const Graph& G, const VertexSet& U);

// Some hole of G[U] through v, if any.
std::optional<Hole> hole_through(const Graph& G, const VertexSet& U, Vertex v);
bool vertex_in_hole(const Graph& G, const VertexSet& U, Vertex v);
bool vertex_in_hole(const Graph& G, Vertex v);

// ---- interval ---------------------------------------------------------------

struct CliquePath {
  std::vector<VertexSet> cliques;  // K_1..K_l (stored 0-based)
  std::vector<int> lp;             // first index per vertex, -1 for non-members
  std::vector<int> rp;             // last index per vertex, -1 for non-members
};

enum class NotIntervalReason { NotChordal, NoConsecutiveArrangement };

struct NotInterval {
  NotIntervalReason reason;
};

std::variant<CliquePath, NotInterval> build_clique_path(const Graph& G, const VertexSet& U);
std::variant<CliquePath, NotInterval> build_clique_path(const Graph& G);

// ---- wheels -------------------------------------------------------------------

struct WheelRoles {
  VertexSet in_wheel;
  VertexSet centers;  // neighborhood contains a cycle
  VertexSet rims;     // on a cycle inside some neighborhood
};

WheelRoles wheel_roles(const Graph& G, const VertexSet& U);
WheelRoles wheel_roles(const Graph& G);

// Vertices of G[U] lying on some cycle of G[U].
VertexSet cycle_vertices(const Graph& G, const VertexSet& U);
bool is_forest(const Graph& G, const VertexSet& U);

// ---- induced subgraph search ------------------------------------------------

inline constexpr std::size_t kMaxPatternOrder = 8;

// A set W ⊆ U with G[W] isomorphic to F. Throws UnsupportedError when F has
// more than kMaxPatternOrder vertices.
std::optional<VertexSet> find_induced(const Graph& F, const Graph& G, const VertexSet& U);
bool contains_induced(const Graph& F, const Graph& G, const VertexSet& U);
bool contains_induced(const Graph& F, const Graph& G);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace heredenum
