#ifndef SPECGRAPH_GRAPH_HPP
#define SPECGRAPH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specgraph {

// Hard cap on vertex counts: adjacency rows are 64-bit masks.
inline constexpr int kMaxVertices = 64;

// Simple undirected graph. Symmetric adjacency, empty diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int v) const;
    std::uint64_t neighbors_mask(int v) const;
    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted descending
    int max_degree() const;
    int min_degree() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Undirected multigraph: non-negative edge multiplicities, zero diagonal.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n);
    explicit MultiGraph(const Graph& g);  // lossless embedding

    int order() const { return n_; }
    int multiplicity(int u, int v) const;
    void add_edge(int u, int v, int count = 1);
    // Edge count with multiplicity.
    int edge_count() const;
    int degree(int v) const;  // with multiplicity
    bool is_simple() const;
    Graph to_graph() const;  // requires all multiplicities <= 1
    // One entry per edge instance, sorted by (u, v, instance index), u < v.
    std::vector<std::pair<int, int>> edge_instances() const;

    bool operator==(const MultiGraph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> mult_;  // n*n, symmetric
};

bool is_connected(const Graph& g);
bool is_connected(const MultiGraph& g);
bool is_bipartite(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Named families with fixed vertex numberings (see make_family below).
enum class Family {
    path,
    cycle,
    complete,
    star,
    kite,
    lollipop,
    double_kite,
    starlike,
    smith_dn,
    smith_e6,
    smith_e7,
    smith_e8,
};

struct FamilySpec {
    Family family;
    int p = 0;
    int q = 0;
    int n = 0;
    int k = 0;
    std::vector<int> branches;  // starlike branch lengths

    // Parses e.g. "kite:p=5,q=3", "path:n=4", "starlike:l=1,1,3".
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

// Canonical vertex numberings (part of the external contract):
//   path P_n:        0-1-...-(n-1)
//   cycle C_n:       0-1-...-(n-1)-0
//   complete K_p:    all pairs
//   star K_{1,k}:    center 0, leaves 1..k
//   kite Kite_p^q:   clique 0..p-1, path appended at p-1 as p..p+q-1
//   lollipop H_{n,p}: cycle 0..p-1, path appended at p-1 as p..n-1
//   double kite DK(p,q): clique 0..p-1 attached at p-1, path p..p+q-1,
//                    second clique p+q..2p+q-1 attached at p+q; for q=0 the
//                    two attachment vertices are joined directly
//   starlike T(l_1..l_D): center 0, branch i appended consecutively
//   smith_dn (extended Dynkin D~n, n>=4): central path 0..n-4, two leaves
//                    n-3,n-2 at vertex 0 and two leaves n-1,n at vertex n-4;
//                    D~4 = K_{1,4}
//   smith_e6/e7/e8:  T(2,2,2), T(1,3,3), T(1,2,5) numbered as starlike
Graph make_family(const FamilySpec& spec);

// Adds petals[i] pendant double edges at vertex i.
MultiGraph b_graph(const Graph& h, const std::vector<int>& petals);

}  // namespace specgraph

#endif
