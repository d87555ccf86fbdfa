#ifndef SPECGRAPH_CLAIMS_HPP
#define SPECGRAPH_CLAIMS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

struct ClaimOptions {
    std::string only;  // claim id prefix filter; empty runs everything
    std::uint32_t seed = 20240501;
    int jobs = 1;
    std::filesystem::path cache_dir = "./census-cache";
};

struct ClaimResult {
    std::string id;
    bool pass;
    double seconds;
    std::string detail;  // first failure description, empty on pass
};

// One entry per claim, in a fixed order. Claim ids are stable identifiers
// like "lemma2.3:line-identity" or "theorem3.1:n<=9".
std::vector<ClaimResult> run_claims(const ClaimOptions& options);

// Test-data helpers (seeded, deterministic).
class GraphSampler {
public:
    explicit GraphSampler(std::uint32_t seed);
    ~GraphSampler();
    Graph random_graph(int n, double edge_probability = 0.5);
    Graph random_tree(int n);
    // Connected unicyclic graph whose unique cycle has odd length; n >= 3.
    Graph random_odd_unicyclic(int n);
    int uniform_int(int lo, int hi);

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace specgraph

#endif
