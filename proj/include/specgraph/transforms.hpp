#ifndef SPECGRAPH_TRANSFORMS_HPP
#define SPECGRAPH_TRANSFORMS_HPP

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Line graph: one vertex per edge instance, adjacent iff the underlying
// edges share exactly one endpoint (so the two edges of a petal are not
// adjacent). Vertex numbering follows edge_instances() order.
Graph line_graph(const MultiGraph& g);
Graph line_graph(const Graph& g);

// Inserts a new vertex in each edge: n+m vertices, 2m edges, bipartite.
// Original vertices keep their numbers; edge vertices follow in edge order.
Graph subdivision(const Graph& g);

// L(b_graph(h, petals)).
Graph generalized_line_graph(const Graph& h, const std::vector<int>& petals);

// Induced subgraph on the other n-1 vertices, indices compacted
// order-preservingly.
Graph delete_vertex(const Graph& g, int v);

}  // namespace specgraph

#endif
