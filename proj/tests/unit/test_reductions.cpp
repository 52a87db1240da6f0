#include <random>

#include "doctest.h"
#include "heredenum/errors.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/reductions.hpp"
#include "heredenum/small_graphs.hpp"
#include "naive.hpp"

using namespace heredenum;

TEST_SUITE("reductions") {
  TEST_CASE("universalize adds one universal vertex") {
    Gadget g = universalize(graphs::path(3));
    CHECK(g.graph.order() == 4);
    CHECK(g.original_order == 3);
    CHECK(g.added.to_vector() == std::vector<Vertex>{3});
    CHECK(g.graph.degree(3) == 3);
    CHECK(g.strip(g.graph.vertices()).to_vector() == std::vector<Vertex>{0, 1, 2});
    CHECK(g.embed(VertexSet(3, {1})).to_vector() == std::vector<Vertex>{1, 3});
    CHECK_THROWS_AS(universalize(ClassSpec::of(ClassKind::Forest), graphs::path(3)),
                    ConfigurationError);
    CHECK_NOTHROW(universalize(ClassSpec::of(ClassKind::Split), graphs::path(3)));
  }

  TEST_CASE("universalize is a bijection for closed classes") {
    std::mt19937_64 rng(51);
    for (ClassKind k : {ClassKind::TriviallyPerfect, ClassKind::Interval, ClassKind::Split,
                        ClassKind::Threshold}) {
      ClassSpec spec = ClassSpec::of(k);
      for (int i = 0; i < 40; ++i) {
        Graph G = naive::random_graph(6, 0.4, rng);
        Gadget g = universalize(spec, G);
        std::set<std::vector<Vertex>> stripped;
        for (const auto& s : naive::solutions(spec, Variant::Connected, g.graph)) {
          VertexSet S(g.graph.order(), s);
          CHECK(g.added.is_subset_of(S));
          stripped.insert(g.strip(S).to_vector());
        }
        CHECK(stripped == naive::solutions(spec, Variant::General, G));
      }
    }
  }

  TEST_CASE("wheel gadget") {
    Graph G = graphs::wheel(4);
    Gadget g = wheel_free_gadget(G);
    CHECK(g.graph.order() == 2 * 5 + 1);
    CHECK(g.added.size() == 6);
    Vertex u = 10;
    CHECK(g.graph.degree(u) == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(g.graph.adjacent(v, 5 + v));
    ClassSpec wf = ClassSpec::of(ClassKind::WheelFree);
    std::set<std::vector<Vertex>> stripped;
    for (const auto& s : naive::solutions(wf, Variant::General, g.graph)) {
      VertexSet S(g.graph.order(), s);
      CHECK(g.added.is_subset_of(S));
      CHECK(is_connected(g.graph, S));
      stripped.insert(g.strip(S).to_vector());
    }
    CHECK(stripped == naive::solutions(wf, Variant::General, G));
  }

  TEST_CASE("degree tree gadget") {
    CHECK_THROWS_AS(degree_tree_gadget(1, graphs::path(3)), PreconditionError);
    std::mt19937_64 rng(52);
    for (int d : {2, 3}) {
      for (int i = 0; i < 10; ++i) {
        Graph G = naive::random_graph(5, 0.5, rng);
        Gadget g = degree_tree_gadget(d, G);
        CHECK(g.original_order == 5);
        ClassSpec big = ClassSpec::degree_bounded(d + 1);
        std::set<std::vector<Vertex>> stripped;
        for (const VertexSet& S : brute_force_enumerate(big, Variant::Connected, g.graph))
          if (g.added.is_subset_of(S)) stripped.insert(g.strip(S).to_vector());
        CHECK(stripped == naive::solutions(ClassSpec::degree_bounded(d), Variant::General, G));
      }
    }
  }

  TEST_CASE("solutions missing part of Z") {
    ClassSpec c4free = ClassSpec::finite_forbidden({graphs::cycle(4)});
    Graph G = graphs::cycle(4);
    StepCounter steps;
    auto general = not_z_solutions(c4free, Variant::General, G, G.vertices(), VertexSet(4, {0, 1, 2}), steps);
    CHECK(naive::as_set(general) ==
          std::set<std::vector<Vertex>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto conn = not_z_solutions(c4free, Variant::Connected, G, G.vertices(), VertexSet(4, {0, 1, 2}),
                                steps);
    CHECK(naive::as_set(conn) == std::set<std::vector<Vertex>>{{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
    Graph p = graphs::path(4);
    CHECK(not_z_solutions(c4free, Variant::General, p, p.vertices(), VertexSet(4, {0}), steps).size() == 1);
    Graph two = graphs::copies(graphs::complete(2), 2);
    CHECK(not_z_solutions(c4free, Variant::Connected, two, two.vertices(), VertexSet(4, {0}), steps)
              .size() == 2);
  }

  TEST_CASE("not-Z solutions match the reference on random instances") {
    ClassSpec spec = ClassSpec::finite_forbidden({graphs::two_k2(), graphs::cycle(4)});
    std::mt19937_64 rng(53);
    int seen = 0;
    for (int i = 0; i < 3000 && seen < 80; ++i) {
      auto inst = naive::random_instance(spec, 1 + i % 4, 7, 0.5, rng, 1);
      if (!inst) continue;
      ++seen;
      for (Variant var : {Variant::General, Variant::Connected}) {
        StepCounter steps;
        auto got = naive::as_set(not_z_solutions(spec, var, inst->G, inst->W, inst->Z, steps));
        std::set<std::vector<Vertex>> expected;
        for (const auto& s : naive::solutions_within(spec, var, inst->G, inst->W))
          if (!inst->Z.is_subset_of(VertexSet(7, s))) expected.insert(s);
        CHECK(got == expected);
      }
    }
    CHECK(seen == 80);
  }

  TEST_CASE("connected solutions from general ones") {
    ClassSpec chordal = ClassSpec::of(ClassKind::Chordal);
    Graph p3 = graphs::path(3);
    StepCounter counter;
    CHECK_THROWS_AS(connected_solutions_from_general(ClassSpec::finite_forbidden({p3}), p3,
                                                     p3.vertices(), VertexSet(3, {1}), {}, counter),
                    ConfigurationError);
    std::mt19937_64 rng(54);
    int seen = 0;
    for (int i = 0; i < 4000 && seen < 60; ++i) {
      auto inst = naive::random_instance(chordal, 3, 8, 0.35, rng, 1);
      if (!inst) continue;
      ++seen;
      std::vector<VertexSet> general;
      for (const auto& s : naive::solutions_within(chordal, Variant::General, inst->G, inst->W))
        general.emplace_back(8, s);
      StepCounter steps;
      auto got = connected_solutions_from_general(chordal, inst->G, inst->W, inst->Z, general, steps);
      CHECK(naive::as_set(got) ==
            naive::solutions_within(chordal, Variant::Connected, inst->G, inst->W));
    }
    CHECK(seen == 60);
  }
}
