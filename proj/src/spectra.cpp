#include "specgraph/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specgraph {

SpectrumReport eigenvalues(const Graph& g, MatrixKind kind) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("eigenvalues: graph must have at least one vertex");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) m(u, v) = kind == MatrixKind::laplacian ? -1.0 : 1.0;
    if (kind != MatrixKind::adjacency)
        for (int v = 0; v < n; ++v) m(v, v) = g.degree(v);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("internal error: symmetric eigensolver did not converge");
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(values.rbegin(), values.rend());

    // Backward-stable solve: eigenvalue error is bounded by O(eps * ||M||).
    double norm_bound = 0;
    for (int v = 0; v < n; ++v) {
        double row = std::abs(m(v, v));
        for (int u = 0; u < n; ++u)
            if (u != v) row += std::abs(m(v, u));
        norm_bound = std::max(norm_bound, row);
    }
    double err = 8 * n * std::numeric_limits<double>::epsilon() * std::max(1.0, norm_bound);
    return {kind, std::move(values), err};
}

double spectral_radius(const Graph& g) {
    return eigenvalues(g, MatrixKind::adjacency).values.front();
}

double second_largest(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("second_largest needs at least two vertices");
    return eigenvalues(g, MatrixKind::adjacency).values[1];
}

InterlacingResult check_interlacing(const Graph& g, const Graph& h,
                                    const std::vector<int>& embedding) {
    int n = g.order(), m = h.order();
    if (static_cast<int>(embedding.size()) != m)
        throw std::invalid_argument("embedding size must match subgraph order");
    std::vector<bool> used(n, false);
    for (int v : embedding) {
        if (v < 0 || v >= n || used[v]) throw std::invalid_argument("embedding is not injective");
        used[v] = true;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (h.has_edge(i, j) != g.has_edge(embedding[i], embedding[j]))
                throw std::invalid_argument("embedding does not induce the subgraph");

    auto gs = eigenvalues(g, MatrixKind::adjacency).values;
    auto hs = eigenvalues(h, MatrixKind::adjacency).values;
    for (int i = 0; i < m; ++i) {
        if (gs[i] < hs[i] - kSpectralSlack) return {false, i};
        if (hs[i] < gs[n - m + i] - kSpectralSlack) return {false, i};
    }
    return {true, -1};
}

}  // namespace specgraph
