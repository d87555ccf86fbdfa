#include "specgraph/claims.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "specgraph/canonical.hpp"
#include "specgraph/census.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/intpoly.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/transforms.hpp"

namespace specgraph {

struct GraphSampler::Impl {
    std::mt19937 rng;
};

GraphSampler::GraphSampler(std::uint32_t seed) : impl_(new Impl{std::mt19937(seed)}) {}
GraphSampler::~GraphSampler() { delete impl_; }

int GraphSampler::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(impl_->rng);
}

Graph GraphSampler::random_graph(int n, double edge_probability) {
    std::bernoulli_distribution flip(edge_probability);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(impl_->rng)) g.add_edge(u, v);
    return g;
}

Graph GraphSampler::random_tree(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(uniform_int(0, v - 1), v);
    return g;
}

Graph GraphSampler::random_odd_unicyclic(int n) {
    if (n < 3) throw std::invalid_argument("odd unicyclic graphs need n >= 3");
    while (true) {
        Graph g = random_tree(n);
        // Vertices at even tree distance close an odd cycle.
        std::vector<int> depth(n, -1);
        depth[0] = 0;
        std::vector<int> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int u = 0; u < n; ++u)
                if (g.has_edge(queue[i], u) && depth[u] < 0) {
                    depth[u] = depth[queue[i]] + 1;
                    queue.push_back(u);
                }
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (depth[u] % 2 == depth[v] % 2 && !g.has_edge(u, v))
                    candidates.emplace_back(u, v);
        if (candidates.empty()) continue;  // star with n=3 etc; resample
        auto [u, v] = candidates[static_cast<std::size_t>(uniform_int(0, static_cast<int>(candidates.size()) - 1))];
        g.add_edge(u, v);
        return g;
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (ok && !condition) {
            ok = false;
            detail = what;
        }
    }
};

Graph kite(int p, int q) { return make_family({Family::kite, p, q}); }

// All trees with edge counts in [min_edges, max_edges], up to isomorphism.
std::vector<Graph> trees_with_edges(int min_edges, int max_edges) {
    std::vector<Graph> out;
    for (int n = min_edges + 1; n <= max_edges + 1; ++n)
        for (const Graph& t : enumerate_trees(n)) out.push_back(t);
    return out;
}

// Descending branch-length multisets summing to `total` with >= min_parts parts.
void branch_multisets(int total, int min_parts, int max_len, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        if (static_cast<int>(current.size()) >= min_parts) emit(current);
        return;
    }
    for (int l = std::min(total, max_len); l >= 1; --l) {
        current.push_back(l);
        branch_multisets(total - l, min_parts, l, current, emit);
        current.pop_back();
    }
}

void claim_paths(Checker& c) {
    for (int n = 1; n <= 32; ++n) {
        auto values = eigenvalues(make_family({Family::path, 0, 0, n}), MatrixKind::adjacency).values;
        for (int j = 1; j <= n; ++j) {
            double expected = 2 * std::cos(M_PI * j / (n + 1));
            if (std::abs(values[j - 1] - expected) > 1e-10) {
                c.require(false, "path n=" + std::to_string(n) + " eigenvalue " + std::to_string(j));
                return;
            }
        }
    }
}

void claim_line_identity(Checker& c, GraphSampler& sampler) {
    for (const Graph& t : trees_with_edges(1, 10))
        c.require(verify_line_identity(t).ok, "line identity failed on tree " + to_graph6(t));
    for (int i = 0; i < 500; ++i) {
        Graph g = sampler.random_odd_unicyclic(sampler.uniform_int(3, 10));
        c.require(verify_line_identity(g).ok, "line identity failed on " + to_graph6(g));
    }
}

void claim_subdivision_identity(Checker& c, GraphSampler& sampler) {
    for (const Graph& t : trees_with_edges(1, 10))
        c.require(verify_subdivision_identity(t).ok,
                  "subdivision identity failed on tree " + to_graph6(t));
    for (int i = 0; i < 500; ++i) {
        Graph g = sampler.random_odd_unicyclic(sampler.uniform_int(3, 10));
        c.require(verify_subdivision_identity(g).ok, "subdivision identity failed on " + to_graph6(g));
    }
}

void claim_discriminants(Checker& c, GraphSampler& sampler) {
    for (const Graph& t : trees_with_edges(2, 10)) {
        Graph l = line_graph(t);
        c.require(discriminant(l) == l.order() + 1,
                  "d(L(T)) != n+1 for tree " + to_graph6(t));
    }
    for (int i = 0; i < 500; ++i) {
        Graph g = sampler.random_odd_unicyclic(sampler.uniform_int(3, 10));
        c.require(discriminant(line_graph(g)) == 4,
                  "d(L(odd unicyclic)) != 4 for " + to_graph6(g));
    }
    for (const Graph& t : trees_with_edges(1, 8)) {
        for (int v = 0; v < t.order(); ++v) {
            std::vector<int> petals(t.order(), 0);
            petals[v] = 1;
            c.require(discriminant(generalized_line_graph(t, petals)) == 4,
                      "d(GL(tree; petal)) != 4 for " + to_graph6(t) + " at " + std::to_string(v));
        }
    }
}

void claim_pendant_recurrence(Checker& c, const CensusOptions& census_options) {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& entry : census_table(n, MatrixKind::adjacency, census_options)) {
            Graph g = from_graph6(entry.g6);
            int pendant = -1;
            for (int v = 0; v < n && pendant < 0; ++v)
                if (g.degree(v) == 1) pendant = v;
            if (pendant < 0) continue;
            c.require(charpoly_pendant_recurrence(g, pendant) ==
                          charpoly(g, MatrixKind::adjacency),
                      "pendant recurrence mismatch on " + entry.g6);
            if (!c.ok) return;
        }
    }
}

void claim_cospectral_invariants(Checker& c, const CensusOptions& census_options) {
    for (int n = 2; n <= 7; ++n) {
        auto report = cospectral_classes(n, MatrixKind::adjacency, false, census_options);
        for (const auto& cls : report.nontrivial) {
            std::vector<Graph> members;
            for (const auto& g6 : cls.members) members.push_back(from_graph6(g6));
            const Graph& first = members.front();
            auto traces = trace_powers(first, n);
            for (std::size_t i = 1; i < members.size(); ++i) {
                c.require(members[i].order() == first.order(), "order mismatch in class " + cls.poly);
                c.require(members[i].edge_count() == first.edge_count(),
                          "edge count mismatch in class " + cls.poly);
                c.require(triangle_count(members[i]) == triangle_count(first),
                          "triangle count mismatch in class " + cls.poly);
                c.require(trace_powers(members[i], n) == traces,
                          "trace powers mismatch in class " + cls.poly);
            }
        }
    }
}

void claim_lambda2(Checker& c) {
    for (int p = 4; p <= 11; ++p) {
        for (int q = 0; q <= 20; ++q) {
            Graph k = kite(p, q);
            c.require(second_largest(k) < 2 - 1e-8,
                      "float lambda2 >= 2-1e-8 for kite p=" + std::to_string(p) +
                          ",q=" + std::to_string(q));
            // Exact route through the root starlike tree: the kite is
            // L(T(1,...,1,q+1)); lambda2 of the subdivision S(T) is at most
            // lambda1(S(T) - center), a union of paths certified below 2,
            // and the exact line/subdivision identities carry the bound to
            // the kite itself.
            std::vector<int> branches(p - 1, 1);
            branches.push_back(q + 1);
            Graph t = make_family({Family::starlike, 0, 0, 0, 0, branches});
            c.require(is_isomorphic(line_graph(t), k),
                      "kite is not the line graph of its starlike tree, p=" + std::to_string(p));
            Graph s = subdivision(t);
            c.require(s.degree(0) == p, "subdivision center degree changed");
            c.require(certify_rho_le(delete_vertex(s, 0), 2, true).proved,
                      "deleted-center path union not certified below 2, p=" + std::to_string(p) +
                          ",q=" + std::to_string(q));
            if (!c.ok) return;
        }
    }
}

void claim_kite_bounds(Checker& c) {
    for (int p = 4; p <= 11; ++p)
        for (int q = 0; q <= 20; ++q) {
            Graph k = kite(p, q);
            c.require(certify_rho_le(k, p, true).proved,
                      "lambda1 < p not certified for kite p=" + std::to_string(p) +
                          ",q=" + std::to_string(q));
            c.require(certify_lambda_min_ge(k, -2, true).proved,
                      "lambda_min > -2 not certified for kite p=" + std::to_string(p) +
                          ",q=" + std::to_string(q));
            if (!c.ok) return;
        }
}

void claim_kite_ds(Checker& c, const CensusOptions& census_options) {
    for (int n = 2; n <= kCensusCap; ++n)
        for (int p = 2; p <= n; ++p) {
            auto verdict = ds_check(kite(p, n - p), MatrixKind::adjacency, false, census_options);
            c.require(verdict.determined, "kite p=" + std::to_string(p) + ",q=" +
                                              std::to_string(n - p) + " has a cospectral mate");
            if (!c.ok) return;
        }
}

void claim_odd_lollipops(Checker& c, const CensusOptions& census_options) {
    for (int p = 3; p <= kCensusCap; p += 2)
        for (int n = p; n <= kCensusCap; ++n) {
            Graph h = make_family({Family::lollipop, p, 0, n});
            auto verdict = ds_check(h, MatrixKind::adjacency, false, census_options);
            c.require(verdict.determined, "lollipop H_{" + std::to_string(n) + "," +
                                              std::to_string(p) + "} has a cospectral mate");
            if (!c.ok) return;
        }
}

void claim_census_counts(Checker& c, const ClaimOptions& options) {
    const long long expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) {
        auto count = static_cast<long long>(enumerate_graphs(n, false, options.jobs).size());
        c.require(count == expected[n - 1],
                  "unlabeled count at n=" + std::to_string(n) + " is " + std::to_string(count));
    }
    // Independent oracle: dedup of every labeled graph.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> classes;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1u) g.add_edge(u, v);
            classes.insert(canonical_form(g));
        }
        c.require(static_cast<long long>(classes.size()) == expected[n - 1],
                  "labeled dedup disagrees at n=" + std::to_string(n));
    }
}

void claim_smallest_pair(Checker& c, const CensusOptions& census_options) {
    auto report = cospectral_classes(5, MatrixKind::adjacency, false, census_options);
    c.require(report.nontrivial.size() == 1, "n=5 census does not have exactly one class");
    if (!c.ok) return;
    std::set<std::string> members(report.nontrivial[0].members.begin(),
                                  report.nontrivial[0].members.end());
    Graph star = make_family({Family::star, 0, 0, 0, 4});
    Graph mate = disjoint_union(make_family({Family::cycle, 0, 0, 4}), Graph(1));
    std::set<std::string> expected{canonical_form(star), canonical_form(mate)};
    c.require(members == expected, "n=5 class is not {K_{1,4}, C4+K1}");
}

void claim_smith(Checker& c) {
    std::vector<Graph> smith;
    for (int n = 3; n <= 9; ++n) smith.push_back(make_family({Family::cycle, 0, 0, n}));
    for (int n = 4; n <= 8; ++n) smith.push_back(make_family({Family::smith_dn, 0, 0, n}));
    smith.push_back(make_family({Family::smith_e6}));
    smith.push_back(make_family({Family::smith_e7}));
    smith.push_back(make_family({Family::smith_e8}));
    for (const Graph& g : smith) {
        c.require(is_smith(g), "is_smith false for " + to_graph6(g));
        for (int v = 0; v < g.order(); ++v) {
            Graph sub = delete_vertex(g, v);
            c.require(certify_rho_le(sub, 2, true).proved,
                      "deleted subgraph of " + to_graph6(g) + " not certified below 2");
            if (is_connected(sub) && sub.order() > 0)
                c.require(!is_smith(sub), "proper subgraph of " + to_graph6(g) + " is Smith");
        }
        if (!c.ok) return;
    }
}

void claim_root_search(Checker& c) {
    for (const Graph& t : trees_with_edges(1, 10)) {
        auto roots = root_graph_search(line_graph(t));
        std::string want = canonical_form(MultiGraph(t));
        bool found = false;
        for (const auto& r : roots)
            if (canonical_form(r.root) == want) found = true;
        c.require(found, "root search misses tree " + to_graph6(t));
        if (!c.ok) return;
    }
    auto roots = root_graph_search(make_family({Family::complete, 3}));
    c.require(roots.size() == 2, "K3 must have exactly two roots, got " +
                                     std::to_string(roots.size()));
}

void claim_starlike_q_ds(Checker& c, const CensusOptions& census_options) {
    for (int n = 6; n <= kCensusCap; ++n) {
        std::vector<std::vector<int>> specs;
        std::vector<int> current;
        branch_multisets(n - 1, 4, n - 1, current,
                         [&](const std::vector<int>& b) { specs.push_back(b); });
        for (const auto& branches : specs) {
            Graph t = make_family({Family::starlike, 0, 0, 0, 0, branches});
            // Among connected graphs: disconnected Q-cospectral mates exist
            // (smallest at n = 8, T(1,2,2,2)) but never matter here, since
            // the candidate root is always a tree.
            auto verdict = ds_check(t, MatrixKind::signless_laplacian, true, census_options);
            c.require(verdict.determined, "starlike tree not Q-DS at n=" + std::to_string(n));
            if (!c.ok) return;
        }
    }
}

void claim_q_line_transfer(Checker& c, const CensusOptions& census_options) {
    for (int n = 2; n <= 7; ++n) {
        auto report = cospectral_classes(n, MatrixKind::signless_laplacian, false, census_options);
        for (const auto& cls : report.nontrivial) {
            IntPoly first;
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                IntPoly p = charpoly(line_graph(from_graph6(cls.members[i])), MatrixKind::adjacency);
                if (i == 0)
                    first = p;
                else
                    c.require(p == first, "Q-cospectral pair with non-cospectral line graphs: " +
                                              cls.members[0] + " " + cls.members[i]);
            }
        }
    }
}

}  // namespace

std::vector<ClaimResult> run_claims(const ClaimOptions& options) {
    CensusOptions census_options{options.jobs, options.cache_dir, true};

    std::vector<std::pair<std::string, std::function<void(Checker&)>>> claims;
    auto add = [&](const std::string& id, std::function<void(Checker&)> fn) {
        claims.emplace_back(id, std::move(fn));
    };

    add("lemma2.1:paths", [](Checker& c) { claim_paths(c); });
    add("lemma2.3:line-identity", [&](Checker& c) {
        GraphSampler sampler(options.seed);
        claim_line_identity(c, sampler);
    });
    add("lemma2.4:subdivision-identity", [&](Checker& c) {
        GraphSampler sampler(options.seed + 1);
        claim_subdivision_identity(c, sampler);
    });
    add("lemma2.8:discriminants", [&](Checker& c) {
        GraphSampler sampler(options.seed + 2);
        claim_discriminants(c, sampler);
    });
    add("lemma2.10:pendant-recurrence",
        [&](Checker& c) { claim_pendant_recurrence(c, census_options); });
    add("lemma2.11-2.12:cospectral-invariants",
        [&](Checker& c) { claim_cospectral_invariants(c, census_options); });
    add("lemma3.1:lambda2", [](Checker& c) { claim_lambda2(c); });
    add("lemma3.3:kite-bounds", [](Checker& c) { claim_kite_bounds(c); });
    add("theorem3.1:n<=9", [&](Checker& c) { claim_kite_ds(c, census_options); });
    add("lemma2.13:odd-lollipops", [&](Checker& c) { claim_odd_lollipops(c, census_options); });
    add("census:counts", [&](Checker& c) { claim_census_counts(c, options); });
    add("census:smallest-pair", [&](Checker& c) { claim_smallest_pair(c, census_options); });
    add("lemma2.6:smith", [](Checker& c) { claim_smith(c); });
    add("lemma2.7:root-search", [](Checker& c) { claim_root_search(c); });
    add("lemma2.5:starlike-q-ds", [&](Checker& c) { claim_starlike_q_ds(c, census_options); });
    add("lemma2.9:q-line-transfer", [&](Checker& c) { claim_q_line_transfer(c, census_options); });

    std::vector<ClaimResult> results;
    for (auto& [id, fn] : claims) {
        if (!options.only.empty() && id.rfind(options.only, 0) != 0) continue;
        Checker checker;
        auto start = Clock::now();
        fn(checker);
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back({id, checker.ok, seconds, checker.detail});
    }
    return results;
}

}  // namespace specgraph
