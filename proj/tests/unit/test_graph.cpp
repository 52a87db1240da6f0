#include <stdexcept>

#include "doctest.h"
#include "heredenum/graph.hpp"
#include "heredenum/small_graphs.hpp"
#include "heredenum/vertex_set.hpp"

using namespace heredenum;

TEST_SUITE("graph") {
  TEST_CASE("vertex set basics across word boundaries") {
    VertexSet s(130, {0, 63, 64, 129});
    CHECK(s.size() == 4);
    CHECK(s.front() == 0);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.to_vector() == std::vector<Vertex>{0, 63, 64, 129});
    s.erase(0);
    CHECK(s.front() == 63);
    VertexSet t(130, {63, 100});
    CHECK((s & t).to_vector() == std::vector<Vertex>{63});
    CHECK((s | t).size() == 4);
    CHECK((s - t).to_vector() == std::vector<Vertex>{64, 129});
    CHECK((s ^ t).to_vector() == std::vector<Vertex>{64, 100, 129});
    CHECK(VertexSet(130).empty());
    CHECK(VertexSet(130).front() == 130);
    CHECK(VertexSet::full(70).size() == 70);
  }

  TEST_CASE("subset, intersection and resize") {
    VertexSet a(10, {1, 2});
    VertexSet b(10, {1, 2, 5});
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet(10, {3})));
    VertexSet r = b.resized(200);
    CHECK(r.universe() == 200);
    CHECK(r.to_vector() == b.to_vector());
    CHECK(a.with(7).without(1).to_vector() == std::vector<Vertex>{2, 7});
  }

  TEST_CASE("lexicographic order on member lists") {
    VertexSet a(5, {0, 3});
    VertexSet b(5, {0, 4});
    VertexSet c(5, {1});
    VertexSet p(5, {0});
    CHECK(lex_less(a, b));
    CHECK(lex_less(b, c));
    CHECK(lex_less(p, a));
    CHECK_FALSE(lex_less(a, a));
    std::vector<VertexSet> v{c, b, a, p};
    sort_canonical(v);
    CHECK(v == std::vector<VertexSet>{p, a, b, c});
  }

  TEST_CASE("equal sets hash equally") {
    VertexSet a(100, {3, 70});
    VertexSet b(100);
    b.insert(70);
    b.insert(3);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a.to_string() == b.to_string());
  }

  TEST_CASE("graph construction") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.closed_neighbors(0).to_vector() == std::vector<Vertex>{0, 1});
    CHECK(g.neighborhood(VertexSet(4, {0, 1})).to_vector() == std::vector<Vertex>{2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::domain_error);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::domain_error);
  }

  TEST_CASE("components and connectivity") {
    Graph g = disjoint_union(graphs::path(3), graphs::complete(2));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_vector() == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1].to_vector() == std::vector<Vertex>{3, 4});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(g, VertexSet(5, {0, 1})));
    CHECK_FALSE(is_connected(g, VertexSet(5, {0, 2})));
    CHECK(component_of(g, VertexSet(5, {0, 2, 3, 4}), 4).to_vector() == std::vector<Vertex>{3, 4});
    CHECK(components(g, VertexSet(5, {0, 2})).size() == 2);
    CHECK(edge_count(g, VertexSet(5, {0, 1, 3})) == 1);
  }

  TEST_CASE("induced subgraph view round trip") {
    Graph g = graphs::cycle(6);
    VertexSet U(6, {1, 2, 4, 5});
    SubgraphView view = induced_subgraph(g, U);
    CHECK(view.graph.order() == 4);
    CHECK(view.graph.edge_count() == 2);
    CHECK(view.to_parent == std::vector<Vertex>{1, 2, 4, 5});
    CHECK(view.to_local[3] == SubgraphView::npos);
    VertexSet local(4, {0, 3});
    CHECK(view.lift(local).to_vector() == std::vector<Vertex>{1, 5});
    CHECK(view.lower(view.lift(local)) == local);
  }

  TEST_CASE("complement") {
    Graph g = complement(graphs::path(4));
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(1, 3));
  }

  TEST_CASE("named small graphs") {
    CHECK(graphs::cycle(5).edge_count() == 5);
    CHECK(graphs::wheel(5).order() == 6);
    CHECK(graphs::wheel(5).degree(5) == 5);
    CHECK(graphs::star(3).edge_count() == 3);
    CHECK(graphs::complete_multipartite({2, 3}).edge_count() == 6);
    CHECK(graphs::copies(graphs::complete(3), 3).order() == 9);
    CHECK(graphs::net().order() == 6);
    CHECK(graphs::gem().edge_count() == 7);
    REQUIRE(graphs::by_name("C7").has_value());
    CHECK(graphs::by_name("C7")->edge_count() == 7);
    CHECK(graphs::by_name("2K2")->edge_count() == 2);
    CHECK(graphs::by_name("I3")->edge_count() == 0);
    CHECK_FALSE(graphs::by_name("nonsense").has_value());
    CHECK_FALSE(graphs::basic_four_leaf_power_list().empty());
  }
}
