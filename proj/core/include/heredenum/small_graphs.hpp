#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heredenum/graph.hpp"

namespace heredenum::graphs {

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
// C_k plus a center adjacent to all of it; the center is vertex k.
Graph wheel(std::size_t k);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
// k disjoint copies of g.
Graph copies(const Graph& g, std::size_t k);

Graph two_k2();
Graph co_p3();
Graph claw();
Graph diamond();
Graph net();
Graph tent();
Graph bull();
Graph dart();
Graph gem();
Graph house();
Graph k5_minus_e();
Graph long_claw();
Graph whipping_top();

// Names accepted: P<n>, C<n>, K<n>, I<n> (edgeless), 2K2, co-P3, claw,
// diamond, net, tent, bull, dart, gem, house, K5-e, long-claw, whipping-top.
std::optional<Graph> by_name(const std::string& name);

// The list shipped in data/basic_four_leaf_power.txt.
const std::vector<Graph>& basic_four_leaf_power_list();

}  // namespace heredenum::graphs
