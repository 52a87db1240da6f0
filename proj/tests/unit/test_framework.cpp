#include <random>

#include "doctest.h"
#include "heredenum/dispatch.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/next.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/small_graphs.hpp"
#include "naive.hpp"

using namespace heredenum;

namespace {

const ClassSpec kCluster = ClassSpec::of(ClassKind::Cluster);

// Exhaustive total solver written against the reference oracle. Charges
// 2^|W| steps up front.
TotalSolver reference_solver(const ClassSpec& spec, Variant variant) {
  return [spec, variant](const Graph& G, const VertexSet& W, StepCounter& steps) {
    steps.tick(std::uint64_t{1} << W.size());
    SubgraphView view = induced_subgraph(G, W);
    std::vector<VertexSet> out;
    for (const auto& s : naive::solutions(spec, variant, view.graph))
      out.push_back(view.lift(VertexSet(view.graph.order(), s)));
    return out;
  };
}

}  // namespace

TEST_SUITE("framework") {
  TEST_CASE("extend is greedy in ascending order and maximal") {
    Graph G = graphs::path(5);
    ClassSpec edgeless = ClassSpec::of(ClassKind::Edgeless);
    CHECK(extend(edgeless, Variant::General, G, G.empty_set()).to_vector() ==
          std::vector<Vertex>{0, 2, 4});
    CHECK(extend(edgeless, Variant::General, G, VertexSet(5, {1})).to_vector() ==
          std::vector<Vertex>{1, 3});
    CHECK(extend(kCluster, Variant::Connected, G, VertexSet(5, {2})).to_vector() ==
          std::vector<Vertex>{1, 2});
    CHECK_THROWS_AS(extend(edgeless, Variant::General, G, VertexSet(5, {0, 1})), PreconditionError);
    CHECK_THROWS_AS(extend(kCluster, Variant::Connected, G, VertexSet(5, {0, 4})),
                    PreconditionError);
    StepCounter steps;
    CHECK_THROWS_AS(
        extend(edgeless, Variant::General, G, VertexSet(5, {0}), VertexSet(5, {2, 4}), steps),
        PreconditionError);
  }

  TEST_CASE("extend always yields solutions") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      Graph G = naive::random_graph(8, 0.4, rng);
      for (const ClassSpec& spec : naive::all_specs()) {
        for (Variant var : {Variant::General, Variant::Connected}) {
          VertexSet start = var == Variant::Connected ? VertexSet(8, {3}) : G.empty_set();
          VertexSet s = extend(spec, var, G, start);
          CHECK(naive::member(spec, naive::Adj::of(G), naive::mask_of(s)));
          CHECK(is_solution(spec, var, G, s));
        }
      }
    }
  }

  TEST_CASE("membership charges steps") {
    StepCounter c;
    Graph G = graphs::cycle(4);
    CHECK_FALSE(member(ClassSpec::of(ClassKind::Chordal), G, G.vertices(), c));
    CHECK(c.steps() >= 1);
    CHECK_FALSE(member(kCluster, Variant::Connected, G, VertexSet(4, {0, 2}), c));
    CHECK_FALSE(member(kCluster, Variant::Connected, G, G.empty_set(), c));
    StepCounter tight(0);
    CHECK_THROWS_AS(member(kCluster, G, G.vertices(), tight), BudgetExhausted);
  }

  TEST_CASE("step counters propagate to parents") {
    StepCounter parent(10);
    StepCounter child(100, &parent);
    child.tick(4);
    CHECK(parent.steps() == 4);
    CHECK_THROWS_AS(child.tick(7), BudgetExhausted);
  }

  TEST_CASE("list, mapped enumerators and limits") {
    std::vector<VertexSet> items{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})};
    ListEnumerator all(items);
    CHECK(all.drain() == items);
    CHECK_FALSE(all.next().has_value());
    CHECK(all.stats().emitted == 3);

    ListEnumerator two(items, 2);
    CHECK(two.drain().size() == 2);

    auto inner = std::make_unique<ListEnumerator>(items);
    MappedEnumerator odd(std::move(inner), [](const VertexSet& s) -> std::optional<VertexSet> {
      if (s.front() == 1) return std::nullopt;
      return s.with(1);
    });
    auto out = odd.drain();
    REQUIRE(out.size() == 2);
    CHECK(out[0].to_vector() == std::vector<Vertex>{0, 1});
  }

  TEST_CASE("traversal visits the strongly connected map once per node") {
    // Map over maximal independent sets of C5: S -> extend({v} ∪ (S - N(v))).
    Graph G = graphs::cycle(5);
    ClassSpec edgeless = ClassSpec::of(ClassKind::Edgeless);
    SuccessorFn succ = [&](const Graph& H, const VertexSet& W, const VertexSet& S, Vertex v,
                           StepCounter& steps, std::vector<VertexSet>& out) {
      out.push_back(extend(edgeless, Variant::General, H, (S - H.neighbors(v)).with(v), W, steps));
    };
    StepCounter steps;
    Traversal t(G, G.vertices(), Variant::General, succ,
                {extend(edgeless, Variant::General, G, G.empty_set())});
    auto sols = t.run(steps);
    CHECK(sols.size() == 5);
    CHECK(naive::as_set(sols) == naive::solutions(edgeless, Variant::General, G));

    Traversal checked(G, G.vertices(), Variant::General,
                      [](const Graph&, const VertexSet&, const VertexSet& S, Vertex v,
                         StepCounter&, std::vector<VertexSet>& out) { out.push_back(S.with(v)); },
                      {VertexSet(5, {0, 2})},
                      [&](const VertexSet& s) { return is_solution(edgeless, Variant::General, G, s); });
    StepCounter c2;
    CHECK(checked.next(c2).has_value());
    CHECK_THROWS_AS(checked.next(c2), ContractViolation);
  }

  TEST_CASE("enumerator statistics") {
    auto e = enumerate(kCluster, Variant::General,
                       std::make_shared<Graph>(graphs::copies(graphs::path(3), 3)), Mode::Delay);
    auto sols = e->drain();
    CHECK(sols.size() == 27);
    const EnumStats& st = e->stats();
    CHECK(st.emitted == 27);
    CHECK(st.steps > 0);
    CHECK(st.max_delay > 0);
    CHECK(st.mean_delay > 0.0);
    CHECK(st.mean_delay <= static_cast<double>(st.max_delay));
    CHECK(st.wall_seconds >= 0.0);
  }

  TEST_CASE("default budget polynomial") {
    BudgetFn b = default_budget();
    CHECK(b(1, 0) == 256 * 16);
    CHECK(b(3, 2) == 256ULL * 256 * 9);
    CHECK(b(1u << 20, 1u << 20) == std::numeric_limits<std::uint64_t>::max());
  }

  TEST_CASE("next_solution reports completion and fresh solutions") {
    Graph G = graphs::cycle(5);
    TotalSolver solver = reference_solver(kCluster, Variant::General);
    StepCounter steps;
    std::vector<VertexSet> known;
    for (;;) {
      NextResult r = next_solution(kCluster, Variant::General, G, known, solver, {}, steps);
      CHECK_FALSE(r.budget_miss);
      if (!r.solution) break;
      CHECK(std::find(known.begin(), known.end(), *r.solution) == known.end());
      known.push_back(*r.solution);
    }
    CHECK(naive::as_set(known) == naive::solutions(kCluster, Variant::General, G));
  }

  TEST_CASE("budget misses: strict throws, lenient recovers") {
    Graph G = graphs::cycle(6);
    // Never fits: the solver charges at least one step per call.
    NextOptions strict{[](std::size_t, std::size_t) { return std::uint64_t{0}; }, true};
    NextOptions lenient{[](std::size_t, std::size_t) { return std::uint64_t{0}; }, false};
    TotalSolver solver = reference_solver(kCluster, Variant::General);
    StepCounter steps;
    // The peel loop drops every vertex, and the final run on the empty set
    // only finds the empty set, which lies inside the known solution.
    std::vector<VertexSet> known{VertexSet(6, {0, 1, 3, 4})};
    CHECK_THROWS_AS(next_solution(kCluster, Variant::General, G, known, solver, strict, steps),
                    ContractViolation);
    NextResult r = next_solution(kCluster, Variant::General, G, known, solver, lenient, steps);
    CHECK(r.budget_miss);
    REQUIRE(r.solution.has_value());
    CHECK(is_solution(kCluster, Variant::General, G, *r.solution));

    auto e = incremental_enumerator(kCluster, Variant::General, std::make_shared<Graph>(G), solver,
                                    lenient);
    auto all = e->drain();
    CHECK(naive::as_set(all) == naive::solutions(kCluster, Variant::General, G));
    CHECK(e->stats().budget_misses > 0);
  }

  TEST_CASE("modes and dispatch errors") {
    CHECK(parse_mode("delay") == Mode::Delay);
    CHECK_FALSE(parse_mode("fast").has_value());
    CHECK(supports(kCluster, Mode::Delay));
    ClassSpec chordal = ClassSpec::of(ClassKind::Chordal);
    CHECK_FALSE(supports(chordal, Mode::Delay));
    CHECK(supported_modes(chordal) == std::vector<Mode>{Mode::Incremental, Mode::Oracle});
    auto G = std::make_shared<Graph>(graphs::cycle(4));
    try {
      enumerate(chordal, Variant::General, G, Mode::Delay);
      FAIL("expected a configuration error");
    } catch (const ConfigurationError& e) {
      CHECK(std::string(e.what()).find("incremental, oracle") != std::string::npos);
    }
    CHECK(enumerate(kCluster, Variant::General, std::make_shared<Graph>(0), Mode::Delay)
              ->drain()
              .empty());
    CHECK(enumerate(kCluster, Variant::General, G, Mode::Oracle, {2})->drain().size() == 2);
  }

  TEST_CASE("every mode agrees with the reference on small graphs") {
    std::vector<ClassSpec> specs = naive::all_specs();
    specs.push_back(ClassSpec::finite_forbidden({graphs::path(4)}));
    std::mt19937_64 rng(17);
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 12; ++trial) {
      auto G = std::make_shared<Graph>(naive::random_graph(6, 0.45, rng));
      for (const ClassSpec& spec : specs)
        for (Variant var : {Variant::General, Variant::Connected}) {
          auto expected = naive::solutions(spec, var, *G);
          for (Mode mode : supported_modes(spec))
            if (naive::as_set(enumerate(spec, var, G, mode)->drain()) != expected) {
              ++mismatches;
              MESSAGE(spec.name() << " " << mode_name(mode));
            }
        }
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("streams are deterministic") {
    auto G = std::make_shared<Graph>(graphs::copies(graphs::cycle(4), 2));
    ClassSpec tp = ClassSpec::of(ClassKind::TriviallyPerfect);
    auto a = enumerate(tp, Variant::General, G, Mode::Delay)->drain();
    auto b = enumerate(tp, Variant::General, G, Mode::Delay)->drain();
    CHECK(a == b);
  }
}
