#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/claims.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/transforms.hpp"

using namespace specgraph;

namespace {

Graph family(const std::string& text) { return make_family(FamilySpec::parse(text)); }

long long triangles_brute(const Graph& g) {
    long long count = 0;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++count;
    return count;
}

std::vector<std::string> classifications(const Graph& g) {
    std::vector<std::string> out;
    for (const auto& r : root_graph_search(g)) out.push_back(r.classification());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("triangle count examples") {
    CHECK(triangle_count(family("complete:p=3")) == 1);
    CHECK(triangle_count(family("complete:p=5")) == 10);
    CHECK(triangle_count(family("path:n=6")) == 0);
    // t(Kite_p^q) = C(p,3)
    for (int p = 3; p <= 7; ++p)
        for (int q = 0; q <= 3; ++q)
            CHECK(triangle_count(family("kite:p=" + std::to_string(p) +
                                        ",q=" + std::to_string(q))) ==
                  p * (p - 1) * (p - 2) / 6);
}

TEST_CASE("triangle count matches brute force on random graphs") {
    GraphSampler sampler(61);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = sampler.random_graph(1 + trial % 10);
        CHECK(triangle_count(g) == triangles_brute(g));
    }
}

TEST_CASE("clique number examples") {
    CHECK(clique_number(family("kite:p=5,q=3")) == 5);
    CHECK(clique_number(family("path:n=7")) == 2);
    CHECK(clique_number(family("cycle:n=5")) == 2);
    CHECK(clique_number(line_graph(family("star:k=4"))) == 4);
    CHECK(clique_number(Graph(3)) == 1);
    CHECK(clique_number(Graph(0)) == 0);
    for (int p = 1; p <= 8; ++p) CHECK(clique_number(family("complete:p=" + std::to_string(p))) == p);
}

TEST_CASE("induced subgraph search") {
    Graph kite = family("kite:p=4,q=2");
    auto hit = induced_subgraph_search(kite, family("complete:p=4"));
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<int>{0, 1, 2, 3});
    CHECK(!induced_subgraph_search(kite, family("cycle:n=4")).has_value());
    CHECK(induced_subgraph_search(kite, family("path:n=4")).has_value());
    CHECK(!induced_subgraph_search(family("path:n=4"), family("complete:p=3")).has_value());
    // An embedding must avoid extra edges: K3 contains no induced P3.
    CHECK(!induced_subgraph_search(family("complete:p=3"), family("path:n=3")).has_value());
}

TEST_CASE("smith graphs") {
    CHECK(is_smith(family("cycle:n=7")));
    CHECK(is_smith(family("star:k=4")));
    CHECK(is_smith(family("smith_dn:n=6")));
    CHECK(is_smith(family("smith_e6")));
    CHECK(is_smith(family("smith_e7")));
    CHECK(is_smith(family("smith_e8")));
    CHECK(!is_smith(family("path:n=9")));
    CHECK(!is_smith(family("complete:p=4")));
    CHECK(!is_smith(family("kite:p=4,q=2")));
    CHECK_THROWS(is_smith(disjoint_union(family("cycle:n=4"), Graph(1))));
}

TEST_CASE("krausz partition validity") {
    Graph p3 = family("path:n=3");
    CHECK(is_valid_krausz(p3, {{{0, 1}, {1, 2}}}));
    CHECK(!is_valid_krausz(p3, {{{0, 1, 2}}}));           // not a clique
    CHECK(!is_valid_krausz(p3, {{{0, 1}}}));              // edge 1-2 uncovered
    Graph k3 = family("complete:p=3");
    CHECK(is_valid_krausz(k3, {{{0, 1, 2}}}));
    CHECK(!is_valid_krausz(k3, {{{0, 1}, {1, 2}, {0, 2}, {0}, {1}}}));  // vertex in 3 cells
}

TEST_CASE("root search on the Whitney pair") {
    auto roots = classifications(family("complete:p=3"));
    // L(K3) = L(K_{1,3}) = K3: exactly the triangle and the claw.
    CHECK(roots == std::vector<std::string>{"odd-unicyclic", "tree"});
}

TEST_CASE("root search on P3") {
    auto roots = root_graph_search(family("path:n=3"));
    REQUIRE(roots.size() == 2);
    bool saw_p4 = false, saw_petal = false;
    for (const auto& r : roots) {
        if (r.is_tree()) {
            saw_p4 = is_isomorphic(r.root, MultiGraph(family("path:n=4")));
        } else {
            saw_petal = r.petal_count() == 1 &&
                        r.classification() == "b-graph" &&
                        is_isomorphic(r.root, b_graph(family("path:n=2"), {1, 0}));
        }
    }
    CHECK(saw_p4);
    CHECK(saw_petal);
}

TEST_CASE("root search recovers starlike trees behind kites") {
    auto roots = root_graph_search(family("kite:p=5,q=2"));
    bool found = false;
    for (const auto& r : roots)
        if (r.is_tree() && is_isomorphic(r.root, MultiGraph(family("starlike:l=1,1,1,1,3"))))
            found = true;
    CHECK(found);
}

TEST_CASE("root search handles non line graphs and edge cases") {
    // K_{1,3} is not the line graph of any simple graph: its multigraph
    // roots are P3 with a petal at one end and an edge with a pendant
    // triple edge.
    auto claw_roots = root_graph_search(family("star:k=3"));
    REQUIRE(claw_roots.size() == 2);
    for (const auto& r : claw_roots) CHECK(!r.root.is_simple());
    auto kinds = classifications(family("star:k=3"));
    CHECK(kinds == std::vector<std::string>{"b-graph", "multigraph"});
    auto k1 = root_graph_search(Graph(1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].root.order() == 2);
    CHECK(k1[0].root.edge_count() == 1);
    CHECK_THROWS(root_graph_search(family("path:n=13")));  // above the cap
}

TEST_CASE("root search witnesses are valid krausz partitions on simple roots") {
    GraphSampler sampler(62);
    for (int trial = 0; trial < 40; ++trial) {
        Graph root = sampler.random_tree(2 + trial % 7);
        Graph g = line_graph(root);
        auto results = root_graph_search(g);
        CHECK(!results.empty());
        bool recovered = false;
        for (const auto& r : results) {
            if (is_isomorphic(r.root, MultiGraph(root))) recovered = true;
            if (r.root.is_simple()) {
                CHECK(is_valid_krausz(g, r.witness));
                CHECK(is_isomorphic(line_graph(r.root), g));
            }
        }
        CHECK(recovered);
    }
}
