#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "heredenum/errors.hpp"
#include "heredenum/io.hpp"
#include "heredenum/small_graphs.hpp"

using namespace heredenum;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    io::parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse edge list with comments") {
    Graph g = io::parse_graph("# a path\n3 2\n0 1  # first\n\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(io::parse_graph("0 0\n").order() == 0);
    CHECK(io::parse_graph("4 0\n").order() == 4);
  }

  TEST_CASE("round trip") {
    Graph g = graphs::gem();
    CHECK(io::parse_graph(io::to_edge_list(g)) == g);
  }

  TEST_CASE("malformed input reports the line") {
    CHECK(error_line("") == 1);
    CHECK(error_line("3\n") == 1);
    CHECK(error_line("3 1\n0 x\n") == 2);
    CHECK(error_line("3 2\n0 1\n0 5\n") == 3);
    CHECK(error_line("3 1\n1 1\n") == 2);
    CHECK(error_line("3 2\n0 1\n1 0\n") == 3);
    CHECK(error_line("3 2\n0 1\n") == 3);
    CHECK(error_line("3 1\n0 1 2\n") == 2);
    CHECK(error_line("3 1\n0 1\n2 0\n") == 3);
    CHECK(error_line("2 5\n") == 1);
    CHECK(error_line("-1 0\n") == 1);
  }

  TEST_CASE("family blocks") {
    auto fam = io::parse_family("4 3\n0 1\n1 2\n2 3\n\n# C4\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].edge_count() == 3);
    CHECK(fam[1].edge_count() == 4);
    CHECK_THROWS_AS(io::parse_family("2 1\n0 1\n2 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_family("\n# only a comment\n"), ParseError);
  }

  TEST_CASE("files") {
    CHECK_THROWS_AS(io::read_graph_file("/nonexistent/graph.el"), std::runtime_error);
    std::string path = "io_test_graph.el";
    {
      std::ofstream out(path);
      out << io::to_edge_list(graphs::cycle(5));
    }
    CHECK(io::read_graph_file(path) == graphs::cycle(5));
    std::remove(path.c_str());
    auto list = io::read_family_file(HEREDENUM_DATA_DIR "/basic_four_leaf_power.txt");
    CHECK(list.size() == graphs::basic_four_leaf_power_list().size());
  }
}
