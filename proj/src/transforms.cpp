#include "specgraph/transforms.hpp"

#include <stdexcept>

namespace specgraph {

Graph line_graph(const MultiGraph& g) {
    auto inst = g.edge_instances();
    int m = static_cast<int>(inst.size());
    if (m > kMaxVertices)
        throw std::invalid_argument("line graph order exceeds " + std::to_string(kMaxVertices));
    Graph lg(m);
    for (int i = 0; i < m; ++i) {
        auto [a, b] = inst[i];
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = inst[j];
            int shared = (a == c) + (a == d) + (b == c) + (b == d);
            if (shared == 1) lg.add_edge(i, j);
        }
    }
    return lg;
}

Graph line_graph(const Graph& g) { return line_graph(MultiGraph(g)); }

Graph subdivision(const Graph& g) {
    auto edges = g.edges();
    int n = g.order(), m = static_cast<int>(edges.size());
    if (n + m > kMaxVertices)
        throw std::invalid_argument("subdivision order exceeds " + std::to_string(kMaxVertices));
    Graph s(n + m);
    for (int i = 0; i < m; ++i) {
        s.add_edge(edges[i].first, n + i);
        s.add_edge(edges[i].second, n + i);
    }
    return s;
}

Graph generalized_line_graph(const Graph& h, const std::vector<int>& petals) {
    return line_graph(b_graph(h, petals));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    Graph out(g.order() - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        out.add_edge(a - (a > v), b - (b > v));
    }
    return out;
}

}  // namespace specgraph
