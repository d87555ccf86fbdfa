#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "specgraph/canonical.hpp"
#include "specgraph/claims.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/transforms.hpp"

using namespace specgraph;

namespace {

Graph family(const std::string& text) { return make_family(FamilySpec::parse(text)); }

}  // namespace

TEST_CASE("line graph examples") {
    CHECK(is_isomorphic(line_graph(family("path:n=4")), family("path:n=3")));
    CHECK(is_isomorphic(line_graph(family("star:k=3")), family("complete:p=3")));
    CHECK(is_isomorphic(line_graph(family("cycle:n=5")), family("cycle:n=5")));
    CHECK(line_graph(family("complete:p=4")).order() == 6);
    CHECK(line_graph(family("complete:p=4")).edge_count() == 12);
}

TEST_CASE("L(P_n) is P_{n-1}") {
    for (int n = 2; n <= 12; ++n) {
        Graph pn = family("path:n=" + std::to_string(n));
        CHECK(is_isomorphic(line_graph(pn), family("path:n=" + std::to_string(n - 1))));
    }
}

TEST_CASE("kites are line graphs of starlike trees") {
    // L(T(1,...,1,q+1)) with p-1 unit branches is Kite_p^q.
    for (int p = 3; p <= 6; ++p)
        for (int q = 0; q <= 3; ++q) {
            std::string spec = "starlike:l=";
            for (int i = 0; i < p - 1; ++i) spec += "1,";
            spec += std::to_string(q + 1);
            Graph t = family(spec);
            Graph kite =
                family("kite:p=" + std::to_string(p) + ",q=" + std::to_string(q));
            CHECK(is_isomorphic(line_graph(t), kite));
        }
}

TEST_CASE("multigraph line graphs separate petal edges") {
    // A single petal: two parallel edges sharing both endpoints, so the line
    // graph is 2K_1, not K_2.
    MultiGraph petal = b_graph(Graph(1), {1});
    Graph lp = line_graph(petal);
    CHECK(lp.order() == 2);
    CHECK(lp.edge_count() == 0);

    MultiGraph triple(2);
    triple.add_edge(0, 1, 3);
    Graph lt = line_graph(triple);
    CHECK(lt.order() == 3);
    CHECK(lt.edge_count() == 0);
}

TEST_CASE("generalized line graph examples") {
    CHECK(is_isomorphic(generalized_line_graph(Graph(1), {1}),
                        disjoint_union(Graph(1), Graph(1))));
    CHECK(is_isomorphic(generalized_line_graph(family("path:n=2"), {1, 0}),
                        family("path:n=3")));
    // GL with all-zero petals is the plain line graph.
    Graph g = family("kite:p=3,q=2");
    CHECK(is_isomorphic(generalized_line_graph(g, {0, 0, 0, 0, 0}), line_graph(g)));
}

TEST_CASE("subdivision examples") {
    CHECK(is_isomorphic(subdivision(family("cycle:n=3")), family("cycle:n=6")));
    CHECK(is_isomorphic(subdivision(family("star:k=3")), family("starlike:l=2,2,2")));
    Graph sp3 = subdivision(family("path:n=3"));
    CHECK(is_isomorphic(sp3, family("path:n=5")));
    CHECK(sp3.order() == 5);
    CHECK(sp3.edge_count() == 4);
}

TEST_CASE("subdivisions are bipartite") {
    GraphSampler sampler(31);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = sampler.random_graph(1 + trial % 10);
        Graph s = subdivision(g);
        CHECK(s.order() == g.order() + g.edge_count());
        CHECK(s.edge_count() == 2 * g.edge_count());
        CHECK(is_bipartite(s));
    }
}

TEST_CASE("line graphs of trees and odd unicyclics have lambda_min > -2") {
    GraphSampler sampler(32);
    for (int trial = 0; trial < 60; ++trial) {
        Graph root = trial % 2 == 0 ? sampler.random_tree(2 + trial % 8)
                                    : sampler.random_odd_unicyclic(3 + trial % 7);
        Graph lg = line_graph(root);
        if (lg.order() == 0) continue;
        CHECK(certify_lambda_min_ge(lg, -2, true).proved);
    }
    // Even cycles attain -2 exactly.
    Graph lc6 = line_graph(family("cycle:n=6"));
    CHECK(certify_lambda_min_ge(lc6, -2, false).proved);
    CHECK(!certify_lambda_min_ge(lc6, -2, true).proved);
}

TEST_CASE("delete_vertex") {
    Graph p4 = family("path:n=4");
    CHECK(is_isomorphic(delete_vertex(p4, 0), family("path:n=3")));
    Graph two_paths = delete_vertex(p4, 1);
    CHECK(two_paths.order() == 3);
    CHECK(two_paths.edge_count() == 1);
    CHECK(two_paths.has_edge(1, 2));  // old vertices 2,3 compacted to 1,2
    CHECK(!is_connected(two_paths));

    Graph kite = family("kite:p=4,q=2");
    CHECK(is_isomorphic(delete_vertex(kite, 5), family("kite:p=4,q=1")));
    CHECK(is_isomorphic(delete_vertex(kite, 0), family("kite:p=3,q=2")));
}
