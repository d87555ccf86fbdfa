#include "specgraph/exact.hpp"

#include <stdexcept>

#include "specgraph/transforms.hpp"

namespace specgraph {

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "adjacency") return MatrixKind::adjacency;
    if (s == "laplacian") return MatrixKind::laplacian;
    if (s == "signless" || s == "signless_laplacian") return MatrixKind::signless_laplacian;
    throw std::invalid_argument("unknown matrix kind '" + s + "'");
}

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
    }
    return "?";
}

std::vector<std::vector<mpz_class>> graph_matrix(const Graph& g, MatrixKind kind) {
    int n = g.order();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) {
                switch (kind) {
                    case MatrixKind::adjacency: m[u][v] = 1; break;
                    case MatrixKind::laplacian: m[u][v] = -1; break;
                    case MatrixKind::signless_laplacian: m[u][v] = 1; break;
                }
            }
    if (kind != MatrixKind::adjacency)
        for (int v = 0; v < n; ++v) m[v][v] = g.degree(v);
    return m;
}

namespace {

IntPoly charpoly_of(const std::vector<std::vector<mpz_class>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<mpz_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    // Faddeev-LeVerrier: M_k = A*M_{k-1} + c_{n-k+1}*I, c_{n-k} = -tr(A*M_k)/k.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<mpz_class>> am(n, std::vector<mpz_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
            }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i][i];
        mpz_class c = -tr / k;  // exact division
        coeffs[n - k] = c;
        m = std::move(am);
        for (int i = 0; i < n; ++i) m[i][i] += c;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly charpoly(const Graph& g, MatrixKind kind) {
    return charpoly_of(graph_matrix(g, kind));
}

IntPoly charpoly_pendant_recurrence(const Graph& g, int pendant) {
    if (pendant < 0 || pendant >= g.order())
        throw std::out_of_range("pendant vertex out of range");
    if (g.degree(pendant) != 1)
        throw std::invalid_argument("vertex " + std::to_string(pendant) + " is not pendant");
    int neighbor = -1;
    for (int u = 0; u < g.order(); ++u)
        if (g.has_edge(pendant, u)) neighbor = u;
    Graph g1 = delete_vertex(g, pendant);
    Graph g2 = delete_vertex(g1, neighbor - (neighbor > pendant));
    return IntPoly::monomial(1) * charpoly(g1, MatrixKind::adjacency) -
           charpoly(g2, MatrixKind::adjacency);
}

mpz_class discriminant(const Graph& g) {
    mpz_class v = charpoly(g, MatrixKind::adjacency).eval(mpz_class(-2));
    return g.order() % 2 ? -v : v;
}

IdentityCheck verify_line_identity(const Graph& g) {
    int n = g.order(), m = g.edge_count();
    IntPoly lhs = charpoly(line_graph(g), MatrixKind::adjacency);
    IntPoly rhs = charpoly(g, MatrixKind::signless_laplacian).shifted(2);
    if (m >= n)
        rhs = rhs * IntPoly::linear_power(2, m - n);
    else
        lhs = lhs * IntPoly::linear_power(2, n - m);
    return {lhs == rhs, lhs, rhs};
}

IdentityCheck verify_subdivision_identity(const Graph& g) {
    int n = g.order(), m = g.edge_count();
    IntPoly lhs = charpoly(subdivision(g), MatrixKind::adjacency);
    IntPoly rhs = charpoly(g, MatrixKind::signless_laplacian).of_square();
    if (m >= n)
        rhs = rhs * IntPoly::monomial(m - n);
    else
        lhs = lhs * IntPoly::monomial(n - m);
    return {lhs == rhs, lhs, rhs};
}

namespace {

struct PsdResult {
    bool semidefinite;
    bool definite;
};

// Exact LDL^T with diagonal pivoting over rationals. A symmetric matrix is
// PSD iff the elimination finds only positive pivots and any all-zero
// diagonal remainder has an all-zero block.
PsdResult check_psd(std::vector<std::vector<mpq_class>> m) {
    int n = static_cast<int>(m.size());
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int j = k; j < n; ++j) {
            if (m[j][j] < 0) return {false, false};
            if (pivot < 0 && m[j][j] > 0) pivot = j;
        }
        if (pivot < 0) {
            // All remaining diagonals are zero; PSD forces the block to vanish.
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (m[i][j] != 0) return {false, false};
            return {true, false};
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            for (int i = 0; i < n; ++i) std::swap(m[i][pivot], m[i][k]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
        for (int j = k + 1; j < n; ++j) m[k][j] = 0;
    }
    return {true, true};
}

std::vector<std::vector<mpq_class>> shifted_matrix(const Graph& g, const mpq_class& diag,
                                                   int adjacency_sign) {
    int n = g.order();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int u = 0; u < n; ++u) {
        m[u][u] = diag;
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) m[u][v] = adjacency_sign;
    }
    return m;
}

}  // namespace

Certificate certify_rho_le(const Graph& g, const mpq_class& bound, bool strict) {
    // bound*I - A
    auto r = check_psd(shifted_matrix(g, bound, -1));
    return {strict ? r.definite : r.semidefinite};
}

Certificate certify_lambda_min_ge(const Graph& g, const mpq_class& bound, bool strict) {
    // A - bound*I
    auto r = check_psd(shifted_matrix(g, -bound, +1));
    return {strict ? r.definite : r.semidefinite};
}

std::vector<mpz_class> trace_powers(const Graph& g, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    int n = g.order();
    auto a = graph_matrix(g, MatrixKind::adjacency);
    auto m = a;
    std::vector<mpz_class> traces;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (a[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i][j] += m[l][j];
                }
            m = std::move(next);
        }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        traces.push_back(tr);
    }
    return traces;
}

}  // namespace specgraph
