#include "specgraph/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "specgraph/canonical.hpp"
#include "specgraph/exact.hpp"

namespace specgraph {

long long triangle_count(const Graph& g) {
    long long paths = 0;
    for (auto [u, v] : g.edges())
        paths += std::popcount(g.neighbors_mask(u) & g.neighbors_mask(v));
    return paths / 3;
}

namespace {

class CliqueSolver {
public:
    explicit CliqueSolver(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) nbr_.push_back(g.neighbors_mask(v));
    }

    int solve() {
        if (n_ == 0) return 0;
        best_ = 1;
        std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        expand(all, 0);
        return best_;
    }

private:
    int n_;
    std::vector<std::uint64_t> nbr_;
    int best_ = 0;

    void expand(std::uint64_t candidates, int size) {
        if (!candidates) {
            best_ = std::max(best_, size);
            return;
        }
        // Greedy coloring upper bound; branch in reverse color order.
        std::vector<int> order, bound;
        std::uint64_t rest = candidates;
        int color = 0;
        while (rest) {
            ++color;
            std::uint64_t cls = rest;
            while (cls) {
                int v = std::countr_zero(cls);
                order.push_back(v);
                bound.push_back(color);
                rest &= ~(std::uint64_t{1} << v);
                cls &= ~(std::uint64_t{1} << v);
                cls &= ~nbr_[v];
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best_) return;
            int v = order[i];
            expand(candidates & nbr_[v], size + 1);
            candidates &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) { return CliqueSolver(g).solve(); }

namespace {

bool embed(const Graph& g, const Graph& p, std::vector<int>& map, std::uint64_t used) {
    int k = static_cast<int>(map.size());
    if (k == p.order()) return true;
    for (int v = 0; v < g.order(); ++v) {
        if ((used >> v) & 1u) continue;
        if (g.degree(v) < p.degree(k)) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = p.has_edge(i, k) == g.has_edge(map[i], v);
        if (!ok) continue;
        map.push_back(v);
        if (embed(g, p, map, used | (std::uint64_t{1} << v))) return true;
        map.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> induced_subgraph_search(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return std::nullopt;
    std::vector<int> map;
    if (embed(g, pattern, map, 0)) return map;
    return std::nullopt;
}

bool is_smith(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_smith requires a connected graph");
    return certify_rho_le(g, 2).proved && !certify_rho_le(g, 2, true).proved;
}

bool is_valid_krausz(const Graph& g, const KrauszPartition& partition) {
    std::vector<int> membership(g.order(), 0);
    std::vector<std::vector<int>> covered(g.order(), std::vector<int>(g.order(), 0));
    for (const auto& cell : partition.cells) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            ++membership[cell[i]];
            for (std::size_t j = i + 1; j < cell.size(); ++j) {
                if (!g.has_edge(cell[i], cell[j])) return false;  // not a clique
                ++covered[cell[i]][cell[j]];
                ++covered[cell[j]][cell[i]];
            }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (membership[v] > 2) return false;
    for (auto [u, v] : g.edges())
        if (covered[u][v] != 1) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && covered[u][v]) return false;
    return true;
}

bool RootGraph::is_tree() const {
    return root.is_simple() && is_connected(root) && root.edge_count() == root.order() - 1;
}

bool RootGraph::is_odd_unicyclic() const {
    if (!root.is_simple() || !is_connected(root) || root.edge_count() != root.order()) return false;
    return !is_bipartite(root.to_graph());
}

int RootGraph::petal_count() const {
    int count = 0;
    for (int u = 0; u < root.order(); ++u)
        for (int v = u + 1; v < root.order(); ++v)
            if (root.multiplicity(u, v) == 2 &&
                (root.degree(u) == 2 || root.degree(v) == 2))
                ++count;
    return count;
}

std::string RootGraph::classification() const {
    std::string prefix = is_connected(root) ? "" : "disconnected-";
    if (root.is_simple()) {
        Graph s = root.to_graph();
        int n = s.order(), m = s.edge_count();
        if (is_connected(s) && m == n - 1) return "tree";
        if (is_connected(s) && m == n) return is_bipartite(s) ? "even-unicyclic" : "odd-unicyclic";
        return prefix + "simple";
    }
    // b-graph: every parallel class is a pendant double edge
    bool b_graph = true;
    for (int u = 0; u < root.order() && b_graph; ++u)
        for (int v = u + 1; v < root.order() && b_graph; ++v) {
            int m = root.multiplicity(u, v);
            if (m > 2) b_graph = false;
            if (m == 2 && root.degree(u) != 2 && root.degree(v) != 2) b_graph = false;
        }
    return prefix + (b_graph ? "b-graph" : "multigraph");
}

namespace {

// Root reconstruction as color-pair assignment: root vertices are colors,
// each g-vertex (a root edge) gets an unordered color pair, and adjacency in
// g must equal "shares exactly one color". New colors are introduced in
// order, which fixes one representative per color renaming.
class RootSearch {
public:
    explicit RootSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<RootGraph> run() {
        pairs_.assign(n_, {0, 0});
        if (n_ == 0) {
            record(0);
        } else {
            assign(0, 0);
        }
        std::vector<RootGraph> out;
        out.reserve(found_.size());
        for (auto& [key, rg] : found_) out.push_back(std::move(rg));
        return out;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::string, RootGraph> found_;

    bool consistent(int i, int a, int b) const {
        for (int j = 0; j < i; ++j) {
            auto [c, d] = pairs_[j];
            int shared = (a == c) + (a == d) + (b == c) + (b == d);
            if (g_.has_edge(i, j) ? shared != 1 : shared == 1) return false;
        }
        return true;
    }

    void assign(int i, int used) {
        if (i == n_) {
            record(used);
            return;
        }
        for (int a = 0; a <= used; ++a) {
            // a < used: b may be existing or the one new color `used`;
            // a == used: both colors new, forced to (used, used+1).
            int b_lo = a < used ? a + 1 : used + 1;
            int b_hi = a < used ? used : used + 1;
            for (int b = b_lo; b <= b_hi; ++b) {
                if (!consistent(i, a, b)) continue;
                pairs_[i] = {a, b};
                assign(i + 1, std::max(used, b + 1));
            }
        }
    }

    void record(int used) {
        MultiGraph root(used);
        KrauszPartition witness;
        witness.cells.assign(used, {});
        for (int i = 0; i < n_; ++i) {
            auto [a, b] = pairs_[i];
            root.add_edge(a, b);
            witness.cells[a].push_back(i);
            witness.cells[b].push_back(i);
        }
        std::string key = canonical_form(root);
        found_.emplace(std::move(key), RootGraph{std::move(root), std::move(witness)});
    }
};

}  // namespace

std::vector<RootGraph> root_graph_search(const Graph& g) {
    if (g.order() > 12)
        throw std::invalid_argument("root_graph_search is capped at 12 vertices");
    return RootSearch(g).run();
}

}  // namespace specgraph
