#pragma once

#include "corospec/graph.hpp"
#include "corospec/layout.hpp"

namespace corospec {

struct DerivedGraph {
    Graph graph;
    CompositeLayout layout;
};

// Vertices are the edges of g (canonical order); two are adjacent iff the
// underlying edges share an endpoint.
Graph line_graph(const Graph& g);

// Subdivide every edge, then join the new vertices of adjacent edges.
// Layout: base = V(g), aux = edge-vertices.
DerivedGraph q_graph(const Graph& g);

// Vertices V(g) union E(g); adjacency = adjacent or incident in g.
DerivedGraph total_graph(const Graph& g);

// Adds a twin u_i adjacent to the neighborhood of each v_i. Twins are not
// adjacent to each other. Layout: base = V(g), aux = twins.
DerivedGraph splitting_graph(const Graph& g);

} // namespace corospec
