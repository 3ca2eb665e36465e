#pragma once

#include <string_view>

#include "corospec/graph.hpp"

namespace corospec {

Graph cycle_graph(int k);    // k >= 3
Graph complete_graph(int k); // k >= 1
Graph path_graph(int k);     // k >= 1
Graph complete_bipartite_graph(int p, int q);
Graph petersen_graph();

// Parses a family spec: "cycle:4", "complete:3", "path:5",
// "complete_bipartite:2:3", "petersen".
Graph generate(std::string_view family_spec);

} // namespace corospec
