#include "specgraph/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "specgraph/graph6.hpp"

namespace specgraph {

namespace {

// Searches for the vertex ordering that minimizes the upper-triangle weight
// string, over the leaves of the refinement tree. Weighted adjacency keeps
// one code path for graphs and multigraphs.
class CanonSearch {
public:
    CanonSearch(int n, std::vector<std::uint8_t> weights) : n_(n), w_(std::move(weights)) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<std::vector<int>> cells(1, std::vector<int>(n_));
        std::iota(cells[0].begin(), cells[0].end(), 0);
        std::vector<int> seq;
        search(cells, seq);
        return best_perm_;
    }

private:
    int n_;
    std::vector<std::uint8_t> w_;
    bool have_best_ = false;
    std::vector<std::uint8_t> best_str_;
    std::vector<int> best_perm_;
    std::vector<std::vector<int>> automorphisms_;

    std::uint8_t wt(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }

    // Sorted multiset of positive weights from v into the splitter cell.
    std::vector<std::uint8_t> profile(int v, const std::vector<int>& splitter) const {
        std::vector<std::uint8_t> key;
        for (int u : splitter)
            if (u != v && wt(v, u)) key.push_back(wt(v, u));
        std::sort(key.begin(), key.end());
        return key;
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const std::vector<int> splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    std::vector<std::pair<std::vector<std::uint8_t>, int>> keyed;
                    keyed.reserve(cells[c].size());
                    for (int v : cells[c]) keyed.emplace_back(profile(v, splitter), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    bool split = false;
                    for (std::size_t i = 1; i < keyed.size(); ++i)
                        if (keyed[i].first != keyed[0].first) split = true;
                    if (!split) continue;
                    std::vector<std::vector<int>> pieces;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                        pieces.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i) perm[i] = cells[i][0];
        std::vector<std::uint8_t> str;
        str.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) str.push_back(wt(perm[i], perm[j]));
        if (!have_best_ || str < best_str_) {
            have_best_ = true;
            best_str_ = std::move(str);
            best_perm_ = std::move(perm);
        } else if (str == best_str_) {
            // Two labelings with equal strings compose to an automorphism.
            std::vector<int> gamma(n_);
            for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = perm[i];
            if (automorphisms_.size() < 64) automorphisms_.push_back(std::move(gamma));
        }
    }

    void search(std::vector<std::vector<int>> cells, std::vector<int>& seq) {
        refine(cells);
        int target = -1;
        std::size_t smallest = static_cast<std::size_t>(n_) + 1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < smallest) {
                smallest = cells[i].size();
                target = static_cast<int>(i);
            }
        if (target < 0) {
            leaf(cells);
            return;
        }

        // Orbit pruning: automorphisms fixing the individualized prefix
        // pointwise identify equivalent branches.
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int s : seq)
                if (gamma[s] != s) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) parent[a] = b;
            }
        }

        std::vector<bool> tried(n_, false);
        for (int v : cells[target]) {
            int root = find(v);
            if (tried[root]) continue;
            tried[root] = true;
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            seq.push_back(v);
            search(std::move(child), seq);
            seq.pop_back();
        }
    }
};

std::vector<std::uint8_t> weight_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        w[static_cast<std::size_t>(u) * n + v] = 1;
        w[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return w;
}

std::vector<std::uint8_t> weight_matrix(const MultiGraph& g) {
    int n = g.order();
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            w[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(g.multiplicity(u, v));
    return w;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    auto perm = CanonSearch(g.order(), weight_matrix(g)).run();
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

MultiGraph canonical_multigraph(const MultiGraph& g) {
    auto perm = CanonSearch(g.order(), weight_matrix(g)).run();
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
    MultiGraph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (int m = g.multiplicity(u, v)) out.add_edge(pos[u], pos[v], m);
    return out;
}

std::string canonical_form(const MultiGraph& g) {
    MultiGraph c = canonical_multigraph(g);
    std::string s;
    s.push_back(static_cast<char>(63 + c.order()));
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v)
            s.push_back(static_cast<char>(63 + c.multiplicity(u, v)));
    return s;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (g1.degree_sequence() != g2.degree_sequence()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

bool is_isomorphic(const MultiGraph& g1, const MultiGraph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

}  // namespace specgraph
