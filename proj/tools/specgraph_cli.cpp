#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "specgraph/canonical.hpp"
#include "specgraph/census.hpp"
#include "specgraph/claims.hpp"
#include "specgraph/exact.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/transforms.hpp"

using json = nlohmann::json;
using namespace specgraph;

namespace {

std::vector<Graph> read_graphs(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(from_graph6(line));
    }
    return graphs;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("SPECGRAPH_CACHE_DIR")) return env;
    return "./census-cache";
}

json analyze_graph(const Graph& g) {
    json out;
    out["n"] = g.order();
    out["m"] = g.edge_count();
    out["triangles"] = triangle_count(g);
    out["clique_number"] = clique_number(g);
    out["discriminant"] = discriminant(g).get_str();
    if (g.order() >= 1) {
        auto spec = eigenvalues(g, MatrixKind::adjacency).values;
        out["lambda1"] = spec.front();
        out["lambda2"] = g.order() >= 2 ? json(spec[1]) : json(nullptr);
        out["lambda_min"] = spec.back();
    } else {
        out["lambda1"] = nullptr;
        out["lambda2"] = nullptr;
        out["lambda_min"] = nullptr;
    }
    out["is_smith"] = is_connected(g) && g.order() > 0 ? json(is_smith(g)) : json(nullptr);
    if (g.order() <= 12) {
        json roots = json::array();
        for (const auto& r : root_graph_search(g)) roots.push_back(r.classification());
        out["root_classification"] = roots;
    } else {
        out["root_classification"] = nullptr;
    }
    return out;
}

json report_to_json(const CensusReport& report) {
    json out;
    out["n"] = report.n;
    out["kind"] = to_string(report.kind);
    out["connected_only"] = report.connected_only;
    out["isomorphism_classes"] = report.total_classes;
    out["cospectral_classes"] = report.cospectral_classes;
    json classes = json::array();
    for (const auto& cls : report.nontrivial)
        classes.push_back({{"charpoly", cls.poly}, {"members", cls.members}});
    out["nontrivial_classes"] = classes;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph characterization toolkit"};
    app.require_subcommand(1);

    std::string kind_name = "adjacency";
    std::string cache_dir = default_cache_dir();
    bool connected = false;
    int jobs = 1;

    auto* cmd_make = app.add_subcommand("make", "construct a named family graph as graph6");
    std::vector<std::string> family_specs;
    cmd_make->add_option("spec", family_specs, "family spec, e.g. kite:p=5,q=3")->required();

    auto* cmd_transform = app.add_subcommand("transform", "apply a graph transform to stdin graphs");
    std::string transform_op;
    std::string petal_list;
    cmd_transform->add_option("op", transform_op, "line | subdivide | gline")
        ->required()
        ->check(CLI::IsMember({"line", "subdivide", "gline"}));
    cmd_transform->add_option("--petals", petal_list, "comma-separated petal counts (gline)");

    auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    cmd_charpoly->add_option("--kind", kind_name, "adjacency | laplacian | signless");

    auto* cmd_spectrum = app.add_subcommand("spectrum", "floating eigenvalues, descending");
    cmd_spectrum->add_option("--kind", kind_name, "adjacency | laplacian | signless");

    app.add_subcommand("analyze", "JSON summary of invariants per input graph");

    auto* cmd_verify = app.add_subcommand("verify", "check an exact identity per input graph");
    std::string identity;
    cmd_verify->add_option("identity", identity, "lemma2.3 | lemma2.4 | lemma2.10")
        ->required()
        ->check(CLI::IsMember({"lemma2.3", "lemma2.4", "lemma2.10"}));

    auto* cmd_census = app.add_subcommand("census", "cospectral classes at a fixed order");
    int census_n = 0;
    cmd_census->add_option("--n", census_n, "graph order (1.." + std::to_string(kCensusCap) + ")")
        ->required();
    cmd_census->add_option("--kind", kind_name, "adjacency | laplacian | signless");
    cmd_census->add_flag("--connected", connected, "restrict to connected graphs");
    cmd_census->add_option("--jobs", jobs, "parallel workers");
    cmd_census->add_option("--cache-dir", cache_dir, "census cache directory");

    auto* cmd_ds = app.add_subcommand("ds-check", "determined-by-spectrum check per input graph");
    cmd_ds->add_option("--kind", kind_name, "adjacency | laplacian | signless");
    cmd_ds->add_flag("--connected", connected, "compare against connected graphs only");
    cmd_ds->add_option("--jobs", jobs, "parallel workers");
    cmd_ds->add_option("--cache-dir", cache_dir, "census cache directory");

    auto* cmd_reproduce = app.add_subcommand("reproduce", "run the claim verification suite");
    std::string claim_filter;
    std::uint32_t seed = 20240501;
    cmd_reproduce->add_option("--claim", claim_filter, "claim id prefix, e.g. lemma2.3");
    cmd_reproduce->add_option("--seed", seed, "seed for randomized test graphs");
    cmd_reproduce->add_option("--jobs", jobs, "parallel workers");
    cmd_reproduce->add_option("--cache-dir", cache_dir, "census cache directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_make->parsed()) {
            for (const auto& text : family_specs)
                std::cout << to_graph6(make_family(FamilySpec::parse(text))) << "\n";
            return 0;
        }
        if (cmd_transform->parsed()) {
            for (const Graph& g : read_graphs(std::cin)) {
                Graph out(0);
                if (transform_op == "line") out = line_graph(g);
                else if (transform_op == "subdivide") out = subdivision(g);
                else out = generalized_line_graph(
                         g, petal_list.empty() ? std::vector<int>(g.order(), 0)
                                               : parse_int_list(petal_list));
                std::cout << to_graph6(out) << "\n";
            }
            return 0;
        }
        if (cmd_charpoly->parsed()) {
            MatrixKind kind = matrix_kind_from_string(kind_name);
            for (const Graph& g : read_graphs(std::cin))
                std::cout << charpoly(g, kind).to_string() << "\n";
            return 0;
        }
        if (cmd_spectrum->parsed()) {
            MatrixKind kind = matrix_kind_from_string(kind_name);
            for (const Graph& g : read_graphs(std::cin))
                for (double v : eigenvalues(g, kind).values)
                    std::printf("%.15g\n", v);
            return 0;
        }
        if (app.get_subcommand("analyze")->parsed()) {
            for (const Graph& g : read_graphs(std::cin))
                std::cout << analyze_graph(g).dump() << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            int failures = 0;
            for (const Graph& g : read_graphs(std::cin)) {
                bool ok;
                if (identity == "lemma2.3") ok = verify_line_identity(g).ok;
                else if (identity == "lemma2.4") ok = verify_subdivision_identity(g).ok;
                else {
                    int pendant = -1;
                    for (int v = 0; v < g.order() && pendant < 0; ++v)
                        if (g.degree(v) == 1) pendant = v;
                    ok = pendant >= 0 && charpoly_pendant_recurrence(g, pendant) ==
                                             charpoly(g, MatrixKind::adjacency);
                }
                std::cout << (ok ? "PASS" : "FAIL") << " " << to_graph6(g) << "\n";
                failures += !ok;
            }
            return failures ? 1 : 0;
        }
        if (cmd_census->parsed()) {
            CensusOptions options{jobs, cache_dir, true};
            auto report =
                cospectral_classes(census_n, matrix_kind_from_string(kind_name), connected, options);
            std::cout << report_to_json(report).dump(2) << "\n";
            return 0;
        }
        if (cmd_ds->parsed()) {
            CensusOptions options{jobs, cache_dir, true};
            MatrixKind kind = matrix_kind_from_string(kind_name);
            bool mates_found = false;
            for (const Graph& g : read_graphs(std::cin)) {
                auto verdict = ds_check(g, kind, connected, options);
                if (verdict.determined) {
                    std::cout << "DS\n";
                } else {
                    mates_found = true;
                    for (const auto& mate : verdict.mates) std::cout << mate << "\n";
                }
            }
            return mates_found ? 1 : 0;
        }
        if (cmd_reproduce->parsed()) {
            ClaimOptions options{claim_filter, seed, jobs, cache_dir};
            auto results = run_claims(options);
            if (results.empty()) {
                std::cerr << "no claim matches '" << claim_filter << "'\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& r : results) {
                std::printf("%s %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                            r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
                all_pass &= r.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
