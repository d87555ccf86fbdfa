#ifndef SPECGRAPH_CENSUS_HPP
#define SPECGRAPH_CENSUS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// Exhaustive enumeration cap: 274,668 isomorphism classes at n = 9.
inline constexpr int kCensusCap = 9;

struct CensusOptions {
    int jobs = 1;
    std::filesystem::path cache_dir = "./census-cache";
    bool use_cache = true;
};

// All graphs on n vertices up to isomorphism, one canonical representative
// each, by one-vertex augmentation with canonical-form dedup. Deterministic
// order (sorted canonical graph6) regardless of the parallelism degree.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false, int jobs = 1);

// All trees on n vertices up to isomorphism (leaf augmentation + dedup).
std::vector<Graph> enumerate_trees(int n);

struct CensusEntry {
    std::string g6;    // canonical graph6
    std::string poly;  // exact charpoly, ascending coefficients
    bool connected;

    bool operator==(const CensusEntry&) const = default;
};

// Every isomorphism class at order n with its exact characteristic
// polynomial, sorted by g6. Backed by an in-memory cache and a line-oriented
// file cache under options.cache_dir.
const std::vector<CensusEntry>& census_table(int n, MatrixKind kind, const CensusOptions& options);

struct CospectralClass {
    std::string poly;
    std::vector<std::string> members;  // canonical graph6, >= 2 entries
};

struct CensusReport {
    int n;
    MatrixKind kind;
    bool connected_only;
    long long total_classes;       // isomorphism classes considered
    long long cospectral_classes;  // distinct polynomials
    std::vector<CospectralClass> nontrivial;
};

CensusReport cospectral_classes(int n, MatrixKind kind, bool connected_only,
                                const CensusOptions& options);

struct DsVerdict {
    bool determined;
    std::vector<std::string> mates;  // canonical graph6 of cospectral non-isomorphic graphs
};

// DS iff no non-isomorphic graph of the same order (restricted to connected
// graphs when connected_only) shares g's exact charpoly.
DsVerdict ds_check(const Graph& g, MatrixKind kind, bool connected_only,
                   const CensusOptions& options);

struct MixedClassInfo {
    std::string poly;
    std::vector<std::string> members;
    bool mixes_connectivity;  // connected and disconnected members coexist
    bool has_kite;            // some member is a kite Kite_p^q
};

struct ConnectivityFilterReport {
    int n;
    std::vector<MixedClassInfo> classes;  // nontrivial adjacency classes
};

ConnectivityFilterReport connectivity_filter_report(int n, const CensusOptions& options);

}  // namespace specgraph

#endif
