#include "specgraph/census.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "specgraph/canonical.hpp"
#include "specgraph/graph6.hpp"

namespace specgraph {

namespace {

constexpr const char* kCacheVersion = "specgraph-census v1";

int clamp_jobs(int jobs) {
    return std::max(1, jobs);
}

// Splits [0, size) into roughly equal chunks and runs fn(begin, end) on each.
void parallel_chunks(std::size_t size, int jobs, const std::function<void(std::size_t, std::size_t, int)>& fn) {
    jobs = clamp_jobs(jobs);
    if (jobs == 1 || size < 2) {
        fn(0, size, 0);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = (size + jobs - 1) / jobs;
    int worker = 0;
    for (std::size_t begin = 0; begin < size; begin += chunk, ++worker)
        threads.emplace_back(fn, begin, std::min(size, begin + chunk), worker);
    for (auto& t : threads) t.join();
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs) {
    if (n < 1 || n > kCensusCap)
        throw std::invalid_argument("enumeration cap is 1 <= n <= " + std::to_string(kCensusCap));
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<std::unordered_set<std::string>> partial(clamp_jobs(jobs));
        parallel_chunks(level.size(), jobs, [&](std::size_t begin, std::size_t end, int worker) {
            auto& seen = partial[static_cast<std::size_t>(worker)];
            for (std::size_t idx = begin; idx < end; ++idx) {
                const Graph& parent = level[idx];
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                    Graph child(k + 1);
                    for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                    for (int v = 0; v < k; ++v)
                        if ((mask >> v) & 1u) child.add_edge(v, k);
                    seen.insert(canonical_form(child));
                }
            }
        });
        std::unordered_set<std::string> merged;
        for (auto& s : partial) merged.merge(s);
        std::vector<std::string> sorted(merged.begin(), merged.end());
        std::sort(sorted.begin(), sorted.end());
        level.clear();
        level.reserve(sorted.size());
        for (const auto& g6 : sorted) level.push_back(from_graph6(g6));
    }
    if (connected_only)
        std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
    return level;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("tree enumeration cap is 1 <= n <= 16");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& parent : level)
            for (int v = 0; v < k; ++v) {
                Graph child(k + 1);
                for (auto [a, b] : parent.edges()) child.add_edge(a, b);
                child.add_edge(v, k);
                next.emplace(canonical_form(child), child);
            }
        level.clear();
        for (auto& [g6, g] : next) level.push_back(from_graph6(g6));
    }
    return level;
}

namespace {

struct TableKey {
    int n;
    MatrixKind kind;
    auto operator<=>(const TableKey&) const = default;
};

std::map<TableKey, std::vector<CensusEntry>> g_tables;
std::mutex g_tables_mutex;

std::filesystem::path cache_file(int n, MatrixKind kind, const CensusOptions& options) {
    return options.cache_dir / ("census-n" + std::to_string(n) + "-" + to_string(kind) + ".txt");
}

bool load_cache(int n, MatrixKind kind, const CensusOptions& options,
                std::vector<CensusEntry>& out) {
    std::ifstream in(cache_file(n, kind, options));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::string expected = std::string(kCacheVersion) + " n=" + std::to_string(n) +
                           " kind=" + to_string(kind);
    if (header != expected) return false;  // stale generator version or mismatched file
    std::string line;
    std::vector<CensusEntry> entries;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto space = line.find(' ');
        if (space == std::string::npos) return false;
        CensusEntry e;
        e.g6 = line.substr(0, space);
        e.poly = line.substr(space + 1);
        e.connected = is_connected(from_graph6(e.g6));
        entries.push_back(std::move(e));
    }
    out = std::move(entries);
    return true;
}

void store_cache(int n, MatrixKind kind, const CensusOptions& options,
                 const std::vector<CensusEntry>& entries) {
    std::error_code ec;
    std::filesystem::create_directories(options.cache_dir, ec);
    if (ec) return;  // cache is best-effort
    auto path = cache_file(n, kind, options);
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    out << kCacheVersion << " n=" << n << " kind=" << to_string(kind) << "\n";
    for (const auto& e : entries) out << e.g6 << ' ' << e.poly << "\n";
}

std::vector<CensusEntry> build_table(int n, MatrixKind kind, const CensusOptions& options) {
    std::vector<CensusEntry> entries;
    if (options.use_cache && load_cache(n, kind, options, entries)) return entries;

    // Reuse the enumeration from a same-order table of another kind if present.
    std::vector<Graph> graphs;
    {
        std::lock_guard<std::mutex> lock(g_tables_mutex);
        for (auto& [key, table] : g_tables)
            if (key.n == n) {
                graphs.reserve(table.size());
                for (const auto& e : table) graphs.push_back(from_graph6(e.g6));
                break;
            }
    }
    if (graphs.empty()) graphs = enumerate_graphs(n, false, options.jobs);

    entries.resize(graphs.size());
    parallel_chunks(graphs.size(), options.jobs, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i) {
            entries[i].g6 = to_graph6(graphs[i]);
            entries[i].poly = charpoly(graphs[i], kind).to_string();
            entries[i].connected = is_connected(graphs[i]);
        }
    });
    if (options.use_cache) store_cache(n, kind, options, entries);
    return entries;
}

}  // namespace

const std::vector<CensusEntry>& census_table(int n, MatrixKind kind,
                                             const CensusOptions& options) {
    if (n < 1 || n > kCensusCap)
        throw std::invalid_argument("census cap is 1 <= n <= " + std::to_string(kCensusCap));
    {
        std::lock_guard<std::mutex> lock(g_tables_mutex);
        auto it = g_tables.find({n, kind});
        if (it != g_tables.end()) return it->second;
    }
    auto entries = build_table(n, kind, options);
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    return g_tables.emplace(TableKey{n, kind}, std::move(entries)).first->second;
}

CensusReport cospectral_classes(int n, MatrixKind kind, bool connected_only,
                                const CensusOptions& options) {
    const auto& table = census_table(n, kind, options);
    std::map<std::string, std::vector<std::string>> by_poly;
    long long total = 0;
    for (const auto& e : table) {
        if (connected_only && !e.connected) continue;
        by_poly[e.poly].push_back(e.g6);
        ++total;
    }
    CensusReport report{n, kind, connected_only, total,
                        static_cast<long long>(by_poly.size()), {}};
    for (auto& [poly, members] : by_poly)
        if (members.size() > 1) report.nontrivial.push_back({poly, members});
    return report;
}

DsVerdict ds_check(const Graph& g, MatrixKind kind, bool connected_only,
                   const CensusOptions& options) {
    const auto& table = census_table(g.order(), kind, options);
    std::string poly = charpoly(g, kind).to_string();
    std::string self = canonical_form(g);
    DsVerdict verdict{true, {}};
    bool seen_self = false;
    for (const auto& e : table) {
        if (e.poly != poly) continue;
        if (connected_only && !e.connected) continue;
        if (e.g6 == self) {
            seen_self = true;
            continue;
        }
        verdict.mates.push_back(e.g6);
    }
    if (!seen_self && !(connected_only && !is_connected(g)))
        throw std::logic_error("census is missing the queried graph; enumeration bug");
    verdict.determined = verdict.mates.empty();
    return verdict;
}

ConnectivityFilterReport connectivity_filter_report(int n, const CensusOptions& options) {
    CensusReport classes = cospectral_classes(n, MatrixKind::adjacency, false, options);

    // Canonical forms of every kite at this order (p >= 1, p + q = n).
    std::unordered_set<std::string> kites;
    for (int p = 1; p <= n; ++p)
        kites.insert(canonical_form(make_family({Family::kite, p, n - p})));

    ConnectivityFilterReport report{n, {}};
    for (const auto& cls : classes.nontrivial) {
        MixedClassInfo info{cls.poly, cls.members, false, false};
        bool any_connected = false, any_disconnected = false;
        for (const auto& g6 : cls.members) {
            (is_connected(from_graph6(g6)) ? any_connected : any_disconnected) = true;
            if (kites.count(g6)) info.has_kite = true;
        }
        info.mixes_connectivity = any_connected && any_disconnected;
        report.classes.push_back(std::move(info));
    }
    return report;
}

}  // namespace specgraph
