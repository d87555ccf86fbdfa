#ifndef SPECGRAPH_EXACT_HPP
#define SPECGRAPH_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/intpoly.hpp"

namespace specgraph {

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

MatrixKind matrix_kind_from_string(const std::string& s);
std::string to_string(MatrixKind kind);

// Exact integer matrix of the chosen kind: A, D-A, or D+A.
std::vector<std::vector<mpz_class>> graph_matrix(const Graph& g, MatrixKind kind);

// Monic degree-n characteristic polynomial det(xI - M), computed exactly
// over big integers (Faddeev-LeVerrier; the divisions are exact).
IntPoly charpoly(const Graph& g, MatrixKind kind);

// P_A(G) via the pendant recurrence x*P_A(G - x1) - P_A(G - x1 - x2),
// where x2 is the unique neighbor of the pendant vertex x1.
IntPoly charpoly_pendant_recurrence(const Graph& g, int pendant);

// Product of (lambda_i + 2), computed exactly as (-1)^n * P_A(-2).
mpz_class discriminant(const Graph& g);

struct IdentityCheck {
    bool ok;
    IntPoly lhs;  // witness polynomials on failure
    IntPoly rhs;
};

// P_A(L(G))(x) * (x+2)^{max(0,n-m)} == (x+2)^{max(0,m-n)} * P_Q(G)(x+2)
IdentityCheck verify_line_identity(const Graph& g);
// P_A(S(G))(x) * x^{max(0,n-m)} == x^{max(0,m-n)} * P_Q(G)(x^2)
IdentityCheck verify_subdivision_identity(const Graph& g);

struct Certificate {
    bool proved;
};

// Decides lambda_1 <= bound (or < bound when strict) via exact positive
// semidefiniteness of bound*I - A.
Certificate certify_rho_le(const Graph& g, const mpq_class& bound, bool strict = false);
// Decides lambda_n >= bound (or > bound when strict) via exact positive
// semidefiniteness of A - bound*I.
Certificate certify_lambda_min_ge(const Graph& g, const mpq_class& bound, bool strict = false);

// tr(A^i) for i = 1..k_max, exact.
std::vector<mpz_class> trace_powers(const Graph& g, int k_max);

}  // namespace specgraph

#endif
