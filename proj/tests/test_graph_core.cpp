#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "specgraph/canonical.hpp"
#include "specgraph/claims.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/transforms.hpp"

using namespace specgraph;

namespace {

Graph family(const std::string& text) { return make_family(FamilySpec::parse(text)); }

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace

TEST_CASE("kite family") {
    Graph k40 = family("kite:p=4,q=0");
    CHECK(k40.order() == 4);
    CHECK(k40.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k40.degree(v) == 3);
    CHECK(is_isomorphic(k40, family("complete:p=4")));

    Graph k42 = family("kite:p=4,q=2");
    CHECK(k42.order() == 6);
    CHECK(k42.edge_count() == 8);
    std::vector<int> degrees;
    for (int v = 0; v < 6; ++v) degrees.push_back(k42.degree(v));
    CHECK(degrees == std::vector<int>{3, 3, 3, 4, 2, 1});

    // Kite_p^q has C(p,2)+q edges and clique number p; p <= 2 collapses to paths.
    for (int p = 2; p <= 8; ++p)
        for (int q = 0; q <= 4; ++q) {
            Graph k = family("kite:p=" + std::to_string(p) + ",q=" + std::to_string(q));
            CHECK(k.order() == p + q);
            CHECK(k.edge_count() == p * (p - 1) / 2 + q);
            CHECK(clique_number(k) == (p >= 2 ? p : 1));
        }
    CHECK(is_isomorphic(family("kite:p=2,q=3"), family("path:n=5")));
    CHECK(is_isomorphic(family("kite:p=1,q=4"), family("path:n=5")));
}

TEST_CASE("starlike family") {
    Graph t = family("starlike:l=1,1,3");
    CHECK(t.order() == 6);
    int high_degree = 0;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) > 2) ++high_degree;
    }
    CHECK(high_degree == 1);
    CHECK(t.degree(0) == 3);
    CHECK_THROWS(family("starlike:l=1,2"));   // needs >= 3 branches
    CHECK_THROWS(family("starlike:l=1,1,0"));  // branch length >= 1
}

TEST_CASE("lollipop and double kite") {
    Graph h = family("lollipop:n=7,p=5");
    CHECK(h.order() == 7);
    CHECK(h.edge_count() == 7);
    CHECK(h.degree(4) == 3);
    CHECK_THROWS(family("lollipop:n=4,p=5"));

    Graph dk = family("double_kite:p=4,q=2");
    CHECK(dk.order() == 10);
    CHECK(dk.edge_count() == 6 + 6 + 3);
    Graph dk0 = family("double_kite:p=3,q=0");
    CHECK(dk0.order() == 6);
    CHECK(dk0.edge_count() == 7);
    CHECK(is_connected(dk0));
}

TEST_CASE("family parameter validation names the bound") {
    CHECK_THROWS_WITH_AS(family("cycle:n=2"), doctest::Contains("n >= 3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(family("kite:p=0,q=1"), doctest::Contains("p >= 1"),
                         std::invalid_argument);
}

TEST_CASE("b_graph") {
    Graph p2 = family("path:n=2");
    MultiGraph unchanged = b_graph(p2, {0, 0});
    CHECK(unchanged == MultiGraph(p2));

    MultiGraph petal = b_graph(Graph(1), {1});
    CHECK(petal.order() == 2);
    CHECK(petal.multiplicity(0, 1) == 2);

    MultiGraph g = b_graph(p2, {1, 0});
    CHECK(g.order() == 3);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.multiplicity(0, 2) == 2);
    CHECK(g.multiplicity(1, 2) == 0);
    CHECK(g.edge_count() == 3);

    // n + sum(a) vertices, m + 2*sum(a) edges with multiplicity
    Graph c4 = family("cycle:n=4");
    MultiGraph bg = b_graph(c4, {2, 0, 1, 0});
    CHECK(bg.order() == 4 + 3);
    CHECK(bg.edge_count() == 4 + 6);
}

TEST_CASE("multigraph round trip") {
    Graph g = family("kite:p=3,q=2");
    CHECK(MultiGraph(g).to_graph() == g);
    MultiGraph m = b_graph(Graph(1), {1});
    CHECK_THROWS(m.to_graph());
}

TEST_CASE("disjoint union") {
    Graph two = disjoint_union(Graph(1), Graph(1));
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    Graph mate = disjoint_union(family("cycle:n=4"), Graph(1));
    CHECK(mate.order() == 5);
    CHECK(mate.edge_count() == 4);
    CHECK(!is_connected(mate));

    Graph p3p2 = disjoint_union(family("path:n=3"), family("path:n=2"));
    CHECK(p3p2.order() == 5);
    CHECK(p3p2.edge_count() == 3);
}

TEST_CASE("canonical form basics") {
    Graph p3 = family("path:n=3");
    Graph relabeled = Graph::from_edges(3, {{2, 0}, {0, 1}});  // P3 as 2-0-1
    CHECK(canonical_form(p3) == canonical_form(relabeled));
    CHECK(canonical_form(family("complete:p=3")) != canonical_form(p3));
    Graph star4 = family("star:k=4");
    Graph c4k1 = disjoint_union(family("cycle:n=4"), Graph(1));
    CHECK(canonical_form(star4) != canonical_form(c4k1));
}

TEST_CASE("is_isomorphic") {
    CHECK(is_isomorphic(family("complete:p=4"), family("kite:p=4,q=0")));
    CHECK(!is_isomorphic(family("path:n=4"), family("star:k=3")));
    // The classical Whitney pair: L(K3) = L(K_{1,3}) = K3.
    CHECK(is_isomorphic(line_graph(family("complete:p=3")), line_graph(family("star:k=3"))));
}

TEST_CASE("canonical form is isomorphism-invariant under random relabelings") {
    GraphSampler sampler(7);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 9;
        Graph g = sampler.random_graph(n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
    }
}

TEST_CASE("multigraph canonical form") {
    MultiGraph a(3);
    a.add_edge(0, 1, 2);
    a.add_edge(1, 2);
    MultiGraph b(3);
    b.add_edge(2, 1, 2);
    b.add_edge(1, 0);
    CHECK(canonical_form(a) == canonical_form(b));
    MultiGraph c(3);
    c.add_edge(0, 1);
    c.add_edge(1, 2, 2);
    CHECK(is_isomorphic(a, c));
    MultiGraph d(3);
    d.add_edge(0, 1);
    d.add_edge(1, 2);
    CHECK(!is_isomorphic(a, d));
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(family("path:n=3")) == "Bg");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6("Bg") == family("path:n=3"));
    CHECK(from_graph6("@") == Graph(1));
}

TEST_CASE("graph6 round trip") {
    GraphSampler sampler(11);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = sampler.random_graph(1 + trial % 12);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 errors carry a byte offset") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK_THROWS_AS(from_graph6("B"), Graph6Error);     // truncated edge bits
    CHECK_THROWS_AS(from_graph6("Bg!"), Graph6Error);   // trailing bytes
    CHECK_THROWS_AS(from_graph6("B\x1f"), Graph6Error); // character out of range
    try {
        from_graph6("B");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 1);
    }
}
