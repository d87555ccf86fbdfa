#ifndef SPECGRAPH_SPECTRA_HPP
#define SPECGRAPH_SPECTRA_HPP

#include <vector>

#include "specgraph/exact.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// Default comparison slack for floating spectral inequalities. Load-bearing
// strict inequalities are additionally backed by exact certificates in
// exact.hpp.
inline constexpr double kSpectralSlack = 1e-9;

struct SpectrumReport {
    MatrixKind kind;
    std::vector<double> values;  // descending
    double err_bound;            // a posteriori absolute bound per eigenvalue
};

SpectrumReport eigenvalues(const Graph& g, MatrixKind kind);
double spectral_radius(const Graph& g);
double second_largest(const Graph& g);

struct InterlacingResult {
    bool ok;
    int violated_index;  // -1 when ok
};

// Verifies lambda_i(G) >= lambda_i(H) >= lambda_{n-m+i}(G) for the induced
// subgraph H of G given by `embedding` (H vertex i -> G vertex embedding[i]).
InterlacingResult check_interlacing(const Graph& g, const Graph& h,
                                    const std::vector<int>& embedding);

}  // namespace specgraph

#endif
