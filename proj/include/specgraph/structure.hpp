#ifndef SPECGRAPH_STRUCTURE_HPP
#define SPECGRAPH_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Exact triangle count t(G) = tr(A^3)/6.
long long triangle_count(const Graph& g);

// Exact clique number by branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);

// First (lexicographic) injective map of `pattern` onto an induced subgraph
// of g, preserving adjacency and non-adjacency. Empty when no embedding.
std::optional<std::vector<int>> induced_subgraph_search(const Graph& g, const Graph& pattern);

// Connected graph with largest adjacency eigenvalue exactly 2, decided by
// exact certificates. Throws on disconnected input.
bool is_smith(const Graph& g);

// Edge partition into cliques with every vertex in at most two cells; the
// constructive witness that a graph is a line graph. For multigraph roots
// the cells generalize (a cell induces a complete multipartite graph whose
// parts are the root's parallel-edge classes).
struct KrauszPartition {
    std::vector<std::vector<int>> cells;  // cells[w] = g-vertices meeting root vertex w
};

// True iff every cell is a clique, cells cover each edge exactly once, and
// every vertex lies in at most two cells (the simple-root case).
bool is_valid_krausz(const Graph& g, const KrauszPartition& partition);

struct RootGraph {
    MultiGraph root;
    KrauszPartition witness;
    bool is_tree() const;
    bool is_odd_unicyclic() const;
    int petal_count() const;  // pendant double edges
    // "tree" | "odd-unicyclic" | "even-unicyclic" | "simple" | "b-graph" |
    // "multigraph", with a "disconnected-" prefix when applicable
    std::string classification() const;
};

// All multigraphs h with line_graph(h) isomorphic to g, up to isomorphism
// and without isolated vertices. Exhaustive backtracking over generalized
// Krausz partitions; cap g.order() <= 12.
std::vector<RootGraph> root_graph_search(const Graph& g);

}  // namespace specgraph

#endif
