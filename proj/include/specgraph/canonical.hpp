#ifndef SPECGRAPH_CANONICAL_HPP
#define SPECGRAPH_CANONICAL_HPP

#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Canonical relabeling by equitable-partition refinement plus backtracking
// over the automorphism-pruned search tree. Equal results iff isomorphic.
Graph canonical_graph(const Graph& g);

// Canonical byte string of a graph: graph6 of the canonical relabeling.
std::string canonical_form(const Graph& g);

// Multigraph variant; the string encodes order plus the canonical
// upper-triangle multiplicities.
MultiGraph canonical_multigraph(const MultiGraph& g);
std::string canonical_form(const MultiGraph& g);

bool is_isomorphic(const Graph& g1, const Graph& g2);
bool is_isomorphic(const MultiGraph& g1, const MultiGraph& g2);

}  // namespace specgraph

#endif
