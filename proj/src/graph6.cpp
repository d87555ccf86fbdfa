#include "specgraph/graph6.hpp"

namespace specgraph {

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // 258047 >= n > 62: '~' then 18 bits in three chars
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw Graph6Error(pos, "truncated input");
        char c = line[pos];
        if (c < 63 || c > 126) throw Graph6Error(pos, "character out of range");
        ++pos;
        return c - 63;
    };

    int n;
    if (!line.empty() && line[0] == '~') {
        ++pos;
        if (pos < line.size() && line[pos] == '~')
            throw Graph6Error(pos, "8-byte orders are not supported");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > kMaxVertices)
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds the supported cap of " +
                                 std::to_string(kMaxVertices));

    Graph g(n);
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) g.add_edge(u, v);
            --bits;
        }
    }
    if (bits && (acc & ((1 << bits) - 1)))
        throw Graph6Error(pos - 1, "nonzero padding bits");
    if (pos != line.size()) throw Graph6Error(pos, "trailing bytes");
    return g;
}

}  // namespace specgraph
