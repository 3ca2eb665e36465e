#pragma once

#include <iosfwd>
#include <string>

#include "corospec/graph.hpp"

namespace corospec {

// Text format: first non-comment line "n m", then m lines "u v" (0-indexed).
// Lines starting with '#' and blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path); // throws IoError

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g); // throws IoError

} // namespace corospec
