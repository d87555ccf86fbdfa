#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specgraph {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 0.." +
                                    std::to_string(kMaxVertices) + ", got " + std::to_string(n));
}

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n - 1));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : rows_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    return (rows_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    return std::popcount(rows_[v]);
}

std::uint64_t Graph::neighbors_mask(int v) const {
    check_vertex(v, n_);
    return rows_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((rows_[u] >> v) & 1u) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

MultiGraph::MultiGraph(int n) : n_(n) {
    check_order(n);
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
}

MultiGraph::MultiGraph(const Graph& g) : MultiGraph(g.order()) {
    for (auto [u, v] : g.edges()) add_edge(u, v);
}

int MultiGraph::multiplicity(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    return mult_[static_cast<std::size_t>(u) * n_ + v];
}

void MultiGraph::add_edge(int u, int v, int count) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (count < 0) throw std::invalid_argument("negative edge multiplicity");
    int m = multiplicity(u, v) + count;
    if (m > 255) throw std::invalid_argument("edge multiplicity overflow");
    mult_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(m);
    mult_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(m);
}

int MultiGraph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) total += multiplicity(u, v);
    return total;
}

int MultiGraph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += multiplicity(v, u);
    return d;
}

bool MultiGraph::is_simple() const {
    for (auto m : mult_)
        if (m > 1) return false;
    return true;
}

Graph MultiGraph::to_graph() const {
    if (!is_simple()) throw std::invalid_argument("multigraph has parallel edges");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (multiplicity(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> MultiGraph::edge_instances() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            for (int i = 0; i < multiplicity(u, v); ++i) out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= g.neighbors_mask(v);
        frontier = next & ~seen;
        seen |= next;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return seen == all;
}

bool is_connected(const MultiGraph& g) {
    Graph skeleton(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.multiplicity(u, v)) skeleton.add_edge(u, v);
    return is_connected(skeleton);
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(g1.order() + u, g1.order() + v);
    return g;
}

namespace {

[[noreturn]] void bad_param(const std::string& family, const std::string& constraint) {
    throw std::invalid_argument(family + ": parameter out of domain, requires " + constraint);
}

Graph make_path(int n) {
    if (n < 1) bad_param("path", "n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_starlike(const std::vector<int>& branches) {
    if (branches.size() < 3) bad_param("starlike", "at least 3 branches");
    for (int l : branches)
        if (l < 1) bad_param("starlike", "every branch length >= 1");
    int n = 1 + std::accumulate(branches.begin(), branches.end(), 0);
    if (n > kMaxVertices) bad_param("starlike", "order <= " + std::to_string(kMaxVertices));
    Graph g(n);
    int next = 1;
    for (int l : branches) {
        int prev = 0;
        for (int i = 0; i < l; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
            return make_path(spec.n);
        case Family::cycle: {
            if (spec.n < 3) bad_param("cycle", "n >= 3");
            Graph g = make_path(spec.n);
            g.add_edge(spec.n - 1, 0);
            return g;
        }
        case Family::complete: {
            if (spec.p < 1) bad_param("complete", "p >= 1");
            Graph g(spec.p);
            for (int u = 0; u < spec.p; ++u)
                for (int v = u + 1; v < spec.p; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::star: {
            if (spec.k < 1) bad_param("star", "k >= 1");
            Graph g(spec.k + 1);
            for (int v = 1; v <= spec.k; ++v) g.add_edge(0, v);
            return g;
        }
        case Family::kite: {
            // Kite_1^q and Kite_2^q collapse to paths P_{1+q} and P_{2+q}.
            if (spec.p < 1) bad_param("kite", "p >= 1");
            if (spec.q < 0) bad_param("kite", "q >= 0");
            Graph g(spec.p + spec.q);
            for (int u = 0; u < spec.p; ++u)
                for (int v = u + 1; v < spec.p; ++v) g.add_edge(u, v);
            for (int i = 0; i < spec.q; ++i) g.add_edge(spec.p - 1 + i, spec.p + i);
            return g;
        }
        case Family::lollipop: {
            if (spec.p < 3) bad_param("lollipop", "p >= 3");
            if (spec.n < spec.p) bad_param("lollipop", "n >= p");
            Graph g(spec.n);
            for (int i = 0; i < spec.p; ++i) g.add_edge(i, (i + 1) % spec.p);
            for (int i = spec.p; i < spec.n; ++i) g.add_edge(i - 1 == spec.p - 1 ? spec.p - 1 : i - 1, i);
            return g;
        }
        case Family::double_kite: {
            if (spec.p < 1) bad_param("double_kite", "p >= 1");
            if (spec.q < 0) bad_param("double_kite", "q >= 0");
            int n = 2 * spec.p + spec.q;
            if (n > kMaxVertices) bad_param("double_kite", "order <= " + std::to_string(kMaxVertices));
            Graph g(n);
            for (int u = 0; u < spec.p; ++u)
                for (int v = u + 1; v < spec.p; ++v) g.add_edge(u, v);
            int base = spec.p + spec.q;
            for (int u = 0; u < spec.p; ++u)
                for (int v = u + 1; v < spec.p; ++v) g.add_edge(base + u, base + v);
            for (int i = 0; i + 1 < spec.q; ++i) g.add_edge(spec.p + i, spec.p + i + 1);
            if (spec.q == 0) {
                g.add_edge(spec.p - 1, base);
            } else {
                g.add_edge(spec.p - 1, spec.p);
                g.add_edge(spec.p + spec.q - 1, base);
            }
            return g;
        }
        case Family::starlike:
            return make_starlike(spec.branches);
        case Family::smith_dn: {
            if (spec.n < 4) bad_param("smith_dn", "n >= 4");
            if (spec.n + 1 > kMaxVertices) bad_param("smith_dn", "order <= " + std::to_string(kMaxVertices));
            int path_len = spec.n - 3;  // central path vertices 0..n-4
            Graph g(spec.n + 1);
            for (int i = 0; i + 1 < path_len; ++i) g.add_edge(i, i + 1);
            g.add_edge(0, path_len);
            g.add_edge(0, path_len + 1);
            g.add_edge(path_len - 1, path_len + 2);
            g.add_edge(path_len - 1, path_len + 3);
            return g;
        }
        case Family::smith_e6:
            return make_starlike({2, 2, 2});
        case Family::smith_e7:
            return make_starlike({1, 3, 3});
        case Family::smith_e8:
            return make_starlike({1, 2, 5});
    }
    throw std::logic_error("unreachable family tag");
}

MultiGraph b_graph(const Graph& h, const std::vector<int>& petals) {
    if (static_cast<int>(petals.size()) != h.order())
        throw std::invalid_argument("petal count list must have one entry per vertex");
    int extra = 0;
    for (int a : petals) {
        if (a < 0) throw std::invalid_argument("petal counts must be non-negative");
        extra += a;
    }
    if (h.order() + extra > kMaxVertices)
        throw std::invalid_argument("b-graph order exceeds " + std::to_string(kMaxVertices));
    MultiGraph g(h.order() + extra);
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    int next = h.order();
    for (int i = 0; i < h.order(); ++i)
        for (int a = 0; a < petals[i]; ++a) g.add_edge(i, next++, 2);
    return g;
}

namespace {

std::vector<std::pair<std::string, std::string>> split_params(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad family parameter '" + item + "', expected key=value");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);

    FamilySpec spec{};
    if (name == "path") spec.family = Family::path;
    else if (name == "cycle") spec.family = Family::cycle;
    else if (name == "complete") spec.family = Family::complete;
    else if (name == "star") spec.family = Family::star;
    else if (name == "kite") spec.family = Family::kite;
    else if (name == "lollipop") spec.family = Family::lollipop;
    else if (name == "double_kite") spec.family = Family::double_kite;
    else if (name == "starlike") spec.family = Family::starlike;
    else if (name == "smith_dn") spec.family = Family::smith_dn;
    else if (name == "smith_e6") spec.family = Family::smith_e6;
    else if (name == "smith_e7") spec.family = Family::smith_e7;
    else if (name == "smith_e8") spec.family = Family::smith_e8;
    else throw std::invalid_argument("unknown family '" + name + "'");

    if (spec.family == Family::starlike) {
        // starlike:l=1,1,3 -- the whole parameter string after "l=" is the list
        if (params.rfind("l=", 0) != 0)
            throw std::invalid_argument("starlike expects l=<len>,<len>,...");
        std::stringstream ss(params.substr(2));
        std::string item;
        while (std::getline(ss, item, ',')) spec.branches.push_back(parse_int(item));
        return spec;
    }
    for (auto& [key, value] : split_params(params)) {
        if (key == "p") spec.p = parse_int(value);
        else if (key == "q") spec.q = parse_int(value);
        else if (key == "n") spec.n = parse_int(value);
        else if (key == "k") spec.k = parse_int(value);
        else throw std::invalid_argument("unknown family parameter '" + key + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    switch (family) {
        case Family::path: return "path:n=" + std::to_string(n);
        case Family::cycle: return "cycle:n=" + std::to_string(n);
        case Family::complete: return "complete:p=" + std::to_string(p);
        case Family::star: return "star:k=" + std::to_string(k);
        case Family::kite: return "kite:p=" + std::to_string(p) + ",q=" + std::to_string(q);
        case Family::lollipop: return "lollipop:n=" + std::to_string(n) + ",p=" + std::to_string(p);
        case Family::double_kite:
            return "double_kite:p=" + std::to_string(p) + ",q=" + std::to_string(q);
        case Family::starlike: {
            std::string s = "starlike:l=";
            for (std::size_t i = 0; i < branches.size(); ++i)
                s += (i ? "," : "") + std::to_string(branches[i]);
            return s;
        }
        case Family::smith_dn: return "smith_dn:n=" + std::to_string(n);
        case Family::smith_e6: return "smith_e6";
        case Family::smith_e7: return "smith_e7";
        case Family::smith_e8: return "smith_e8";
    }
    return "?";
}

}  // namespace specgraph
