#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heredenum/graph.hpp"

namespace heredenum::io {

// Edge-list format: header line "n m", then m lines "u v" with 0-based ids.
// '#' starts a comment. Errors throw ParseError carrying the line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Several edge-list blocks separated by blank lines.
std::vector<Graph> parse_family(std::istream& in);
std::vector<Graph> parse_family(const std::string& text);

// Throws std::runtime_error when the file cannot be opened.
Graph read_graph_file(const std::string& path);
std::vector<Graph> read_family_file(const std::string& path);

std::string to_edge_list(const Graph& G);

}  // namespace heredenum::io
