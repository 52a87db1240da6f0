#include <random>

#include "doctest.h"
#include "heredenum/class_spec.hpp"
#include "heredenum/errors.hpp"
#include "heredenum/io.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/small_graphs.hpp"
#include "naive.hpp"

using namespace heredenum;

namespace {

// Cliques are cliques, every member occupies one contiguous run matching
// lp/rp, and adjacent members share a clique.
bool valid_clique_path(const Graph& G, const VertexSet& U, const CliquePath& cp) {
  for (const VertexSet& K : cp.cliques)
    for (Vertex a : K)
      for (Vertex b : K)
        if (a != b && !G.adjacent(a, b)) return false;
  for (Vertex v : U) {
    int first = -1, last = -1;
    for (std::size_t i = 0; i < cp.cliques.size(); ++i)
      if (cp.cliques[i].contains(v)) {
        if (last >= 0 && last != static_cast<int>(i) - 1) return false;
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
      }
    if (first < 0 || cp.lp[v] != first || cp.rp[v] != last) return false;
  }
  for (Vertex a : U)
    for (Vertex b : U)
      if (a < b && G.adjacent(a, b) && (cp.rp[a] < cp.lp[b] || cp.rp[b] < cp.lp[a])) return false;
  return true;
}

bool valid_peo(const Graph& G, const VertexSet& U, const std::vector<Vertex>& peo) {
  if (peo.size() != U.size()) return false;
  VertexSet later(G.order());
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    VertexSet nb = G.neighbors(*it) & later;
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (a < b && !G.adjacent(a, b)) return false;
    later.insert(*it);
  }
  return later == U;
}

bool valid_hole(const Graph& G, const std::vector<Vertex>& cycle) {
  std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (G.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

// Generating forest: ancestors are exactly the comparable-and-adjacent
// vertices.
bool valid_forest(const Graph& G, const VertexSet& U, const GeneratingForest& f) {
  for (Vertex a : U)
    for (Vertex b : U) {
      if (a == b) continue;
      bool comparable = f.is_ancestor(a, b) || f.is_ancestor(b, a);
      if (comparable != G.adjacent(a, b)) return false;
    }
  return true;
}

std::vector<ClassSpec> specs_with_family() {
  std::vector<ClassSpec> specs = naive::all_specs();
  specs.push_back(ClassSpec::finite_forbidden({graphs::claw(), graphs::cycle(4)}));
  return specs;
}

}  // namespace

TEST_SUITE("recognition") {
  TEST_CASE("membership agrees with the forbidden-subgraph reference on all graphs n <= 5") {
    std::vector<ClassSpec> specs = specs_with_family();
    std::size_t disagreements = 0;
    for (std::size_t n = 0; n <= 5; ++n) {
      naive::for_each_labeled(n, [&](const Graph& G) {
        naive::Adj a = naive::Adj::of(G);
        naive::Mask full = n ? (naive::Mask{1} << n) - 1 : 0;
        for (const ClassSpec& spec : specs)
          if (in_class(spec, G, G.vertices()) != naive::member(spec, a, full)) {
            ++disagreements;
            MESSAGE(spec.name() << " on " << io::to_edge_list(G));
          }
      });
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("membership on random subsets of 8-vertex graphs") {
    std::vector<ClassSpec> specs = specs_with_family();
    std::mt19937_64 rng(11);
    std::size_t disagreements = 0;
    for (int trial = 0; trial < 150; ++trial) {
      Graph G = naive::random_graph(8, 0.5, rng);
      naive::Adj a = naive::Adj::of(G);
      naive::Mask m = static_cast<naive::Mask>(rng() & 0xff);
      VertexSet U = naive::to_set(8, m);
      for (const ClassSpec& spec : specs)
        if (in_class(spec, G, U) != naive::member(spec, a, m)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("recognize with the connected flag") {
    ClassSpec chordal = ClassSpec::of(ClassKind::Chordal);
    Graph two = graphs::copies(graphs::complete(3), 2);
    CHECK(recognize(chordal, two));
    CHECK_FALSE(recognize(chordal, two, true));
    CHECK(recognize(chordal, graphs::complete(3), true));
    CHECK_FALSE(recognize(chordal, graphs::cycle(4)));
  }

  TEST_CASE("generating forest certificates") {
    std::mt19937_64 rng(3);
    int built = 0;
    for (int trial = 0; trial < 400; ++trial) {
      Graph G = naive::random_graph(7, 0.6, rng);
      VertexSet U = naive::to_set(7, static_cast<naive::Mask>(rng() & 0x7f));
      auto r = build_generating_forest(G, U);
      naive::Mask m = naive::mask_of(U);
      bool member = naive::free_of(naive::Adj::of(G), m, {naive::P(4), naive::C(4)});
      REQUIRE(std::holds_alternative<GeneratingForest>(r) == member);
      if (member) {
        ++built;
        CHECK(valid_forest(G, U, std::get<GeneratingForest>(r)));
      } else {
        const VertexSet& w = std::get<NotTriviallyPerfect>(r).witness;
        CHECK(w.is_subset_of(U));
        CHECK(is_connected(G, w));
        bool universal = false;
        for (Vertex x : w)
          if ((G.closed_neighbors(x) & w) == w) universal = true;
        CHECK_FALSE(universal);
      }
    }
    CHECK(built > 20);
  }

  TEST_CASE("generating forest queries") {
    // 0 is universal; 1 and 2 form a chain under it, 3 is a leaf.
    Graph G(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto f = std::get<GeneratingForest>(build_generating_forest(G));
    CHECK(f.parent[0] == GeneratingForest::kRoot);
    CHECK(f.descendants(0).size() == 3);
    Vertex low = f.parent[1] == 0 ? 1 : 2;
    Vertex high = low == 1 ? 2 : 1;
    CHECK(f.parent[high] == low);
    CHECK(f.lca(high, 3) == 0);
    CHECK(f.order.size() == 4);
    CHECK(f.order.back() == 0);
  }

  TEST_CASE("chordal certificates and holes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
      Graph G = naive::random_graph(8, 0.35, rng);
      VertexSet U = naive::to_set(8, static_cast<naive::Mask>(rng() & 0xff));
      naive::Mask m = naive::mask_of(U);
      bool chordal = !naive::has_induced_cycle(naive::Adj::of(G), m, 4);
      CHECK(is_chordal(G, U) == chordal);
      auto r = chordal_certificates(G, U);
      REQUIRE(std::holds_alternative<ChordalCertificate>(r) == chordal);
      if (chordal) {
        const auto& c = std::get<ChordalCertificate>(r);
        CHECK(valid_peo(G, U, c.peo));
        if (!U.empty()) CHECK(c.clique_tree.size() + components(G, U).size() == c.cliques.size());
        for (const VertexSet& K : c.cliques) {
          bool maximal = true;
          for (Vertex x : U - K)
            if ((G.neighbors(x) & K) == K) maximal = false;
          CHECK(maximal);
        }
      } else {
        const auto& h = std::get<Hole>(r);
        CHECK(valid_hole(G, h.cycle));
        for (Vertex v : h.cycle) CHECK(U.contains(v));
      }
      for (Vertex v : U) {
        auto h = hole_through(G, U, v);
        bool in_some = false;
        naive::Adj a = naive::Adj::of(G);
        for (naive::Mask s = m; s; s = (s - 1) & m)
          if ((s >> v & 1) && naive::popcount(s) >= 4 && naive::has_induced_cycle(a, s, 4)) {
            bool cyc = true;
            for (int x : naive::members(s))
              if (naive::popcount(a.nb[x] & s) != 2) cyc = false;
            if (cyc && naive::connected(a, s)) {
              in_some = true;
              break;
            }
          }
        CHECK(h.has_value() == in_some);
        CHECK(vertex_in_hole(G, U, v) == in_some);
        if (h) {
          CHECK(valid_hole(G, h->cycle));
          CHECK(std::find(h->cycle.begin(), h->cycle.end(), v) != h->cycle.end());
        }
      }
    }
  }

  TEST_CASE("clique paths") {
    std::mt19937_64 rng(9);
    int built = 0;
    for (int trial = 0; trial < 600; ++trial) {
      Graph G = naive::random_graph(8, 0.45, rng);
      VertexSet U = naive::to_set(8, static_cast<naive::Mask>(rng() & 0xff));
      naive::Mask m = naive::mask_of(U);
      naive::Adj a = naive::Adj::of(G);
      bool interval = !naive::has_induced_cycle(a, m, 4) && !naive::has_asteroidal_triple(a, m);
      auto r = build_clique_path(G, U);
      REQUIRE(std::holds_alternative<CliquePath>(r) == interval);
      if (interval) {
        ++built;
        CHECK(valid_clique_path(G, U, std::get<CliquePath>(r)));
      } else {
        bool chordal = !naive::has_induced_cycle(a, m, 4);
        CHECK((std::get<NotInterval>(r).reason == NotIntervalReason::NotChordal) == !chordal);
      }
    }
    CHECK(built > 50);
  }

  TEST_CASE("wheel roles match brute force") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
      Graph G = naive::random_graph(8, 0.4, rng);
      naive::Adj a = naive::Adj::of(G);
      WheelRoles roles = wheel_roles(G);
      VertexSet centers(8), rims(8);
      for (int c = 0; c < 8; ++c) {
        naive::Mask nb = a.nb[c];
        for (naive::Mask s = nb; s; s = (s - 1) & nb) {
          if (naive::popcount(s) < 3 || !naive::connected(a, s)) continue;
          bool cyc = true;
          for (int x : naive::members(s))
            if (naive::popcount(a.nb[x] & s) != 2) cyc = false;
          if (!cyc) continue;
          centers.insert(c);
          for (int x : naive::members(s)) rims.insert(x);
        }
      }
      CHECK(roles.centers == centers);
      CHECK(roles.rims == rims);
      CHECK(roles.in_wheel == (centers | rims));
    }
  }

  TEST_CASE("forests and cycle vertices") {
    Graph G = disjoint_union(graphs::cycle(4), graphs::path(3));
    CHECK(cycle_vertices(G, G.vertices()).to_vector() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(is_forest(G, G.vertices()));
    CHECK(is_forest(G, VertexSet(7, {0, 1, 2, 4, 5, 6})));
    Graph tri = graphs::complete(3);
    CHECK(cycle_vertices(tri, tri.vertices()).size() == 3);
  }

  TEST_CASE("induced pattern search") {
    Graph G = graphs::cycle(6);
    auto p4 = find_induced(graphs::path(4), G, G.vertices());
    REQUIRE(p4.has_value());
    CHECK(isomorphic(induced_subgraph(G, *p4).graph, graphs::path(4)));
    CHECK_FALSE(contains_induced(graphs::cycle(4), G));
    CHECK(contains_induced(graphs::two_k2(), G));
    CHECK_FALSE(contains_induced(graphs::two_k2(), G, VertexSet(6, {0, 1, 2, 3})));
    CHECK(isomorphic(graphs::bull(), induced_subgraph(graphs::bull(), graphs::bull().vertices()).graph));
    CHECK_FALSE(isomorphic(graphs::path(4), graphs::star(3)));
    CHECK_THROWS_AS(find_induced(graphs::cycle(9), G, G.vertices()), UnsupportedError);
  }

  TEST_CASE("class names and specs") {
    for (ClassKind k : all_class_kinds()) CHECK(parse_class_kind(class_kind_name(k)) == k);
    CHECK_FALSE(parse_class_kind("planar").has_value());
    CHECK_THROWS(ClassSpec::of(ClassKind::FiniteForbidden));
    CHECK_THROWS_AS(ClassSpec::finite_forbidden({}), std::invalid_argument);
    CHECK_THROWS_AS(ClassSpec::finite_forbidden({graphs::path(3), graphs::path(4)}),
                    std::invalid_argument);
    CHECK(capabilities(ClassSpec::of(ClassKind::Chordal)).forbids_holes);
    CHECK(capabilities(ClassSpec::of(ClassKind::TriviallyPerfect)).closed_under_universal);
    CHECK_FALSE(capabilities(ClassSpec::of(ClassKind::Forest)).closed_under_universal);
    CHECK(is_biconnected(graphs::cycle(5)));
    CHECK(is_biconnected(graphs::complete(2)));
    CHECK_FALSE(is_biconnected(graphs::path(3)));
  }
}
