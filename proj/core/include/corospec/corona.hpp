#pragma once

#include <optional>
#include <string_view>

#include "corospec/graph.hpp"
#include "corospec/layout.hpp"

namespace corospec {

enum class CoronaKind {
    corona,
    neighbourhood,
    total,
    splitting,
    splitting_add_vertex,
    splitting_neighbourhood,
    q_vertex,
    q_edge,
};

std::string_view to_string(CoronaKind kind);

// Accepts hyphens or underscores, e.g. "q-vertex" or "q_vertex".
std::optional<CoronaKind> corona_kind_from_string(std::string_view name);

struct Composite {
    Graph graph;
    CompositeLayout layout;
};

// Builds the composite of g1 and g2 under the given operation, with vertex
// order [ V(g1) | aux | copies of g2 ]. Copy i occupies a contiguous block and
// keeps g2's own labeling. The q/total kinds require g1 to have an edge.
Composite compose(CoronaKind kind, const Graph& g1, const Graph& g2);

// Closed-form degree multiset (ascending) of the composite of two regular
// graphs. Throws std::invalid_argument when either input is not regular.
std::vector<int> degrees_of_composite(CoronaKind kind, const Graph& g1,
                                      const Graph& g2);

} // namespace corospec
