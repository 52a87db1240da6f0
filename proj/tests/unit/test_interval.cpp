#include <random>

#include "doctest.h"
#include "heredenum/errors.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/small_graphs.hpp"
#include "heredenum/succ_interval.hpp"
#include "naive.hpp"

using namespace heredenum;

namespace {

const ClassSpec kInterval = ClassSpec::of(ClassKind::Interval);

std::size_t clique_count(const Graph& G, const VertexSet& S) {
  return std::get<CliquePath>(build_clique_path(G, S)).cliques.size();
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("C4 has four connected solutions") {
    auto G = std::make_shared<Graph>(graphs::cycle(4));
    CHECK(interval_enumerate(G, Variant::Connected)->drain().size() == 4);
  }

  TEST_CASE("candidate count is l + 1 + l(l - 1)") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Graph G = naive::random_graph(8, 0.4, rng);
      for (const VertexSet& S : brute_force_enumerate(kInterval, Variant::Connected, G))
        for (Vertex v : G.neighborhood(S)) {
          auto cands = interval_candidates(G, G.vertices(), S, v);
          std::size_t l = clique_count(G, S);
          CHECK(cands.size() == l + 1 + l * (l - 1));
          for (const IntervalCandidate& c : cands) {
            CHECK(c.set.is_subset_of(S));
            CHECK(c.a >= 0);
            CHECK(c.b <= static_cast<int>(l) + 1);
            if (c.rule == 1) CHECK(c.b == c.a + 1);
            if (c.rule == 2) CHECK(c.a >= 1);
            if (c.rule == 3) CHECK(c.b <= static_cast<int>(l));
          }
          ++checked;
        }
    }
    CHECK(checked > 500);
  }

  TEST_CASE("candidate preconditions") {
    Graph G = graphs::cycle(4);
    CHECK_THROWS_AS(interval_candidates(G, G.vertices(), G.vertices(), 0), PreconditionError);
    CHECK_THROWS_AS(interval_candidates(G, G.vertices(), VertexSet(4, {0, 2}), 1),
                    ContractViolation);
    Graph c4_tail(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK_THROWS_AS(
        interval_candidates(c4_tail, c4_tail.vertices(), VertexSet(5, {0, 1, 2, 3}), 4),
        ContractViolation);
  }

  TEST_CASE("successors are solutions containing v") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 150; ++trial) {
      Graph G = naive::random_graph(7, 0.45, rng);
      auto expected = naive::solutions(kInterval, Variant::Connected, G);
      for (const auto& s : expected) {
        VertexSet S(7, s);
        for (Vertex v : G.neighborhood(S))
          for (const VertexSet& T : interval_successors(G, S, v)) {
            CHECK(T.contains(v));
            CHECK(expected.count(T.to_vector()) == 1);
          }
      }
    }
  }

  TEST_CASE("enumeration matches the reference") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 120; ++trial) {
      auto G = std::make_shared<Graph>(naive::random_graph(7, trial % 2 ? 0.3 : 0.6, rng));
      for (Variant var : {Variant::General, Variant::Connected}) {
        auto got = interval_enumerate(G, var, std::nullopt, true)->drain();
        CHECK(got.size() == naive::as_set(got).size());
        CHECK(naive::as_set(got) == naive::solutions(kInterval, var, *G));
      }
    }
  }
}
