#ifndef LEVELWISE_TRIDIAG_HPP
#define LEVELWISE_TRIDIAG_HPP

#include <cstddef>
#include <vector>

#include "levelwise/tree.hpp"

namespace levelwise {

/// Symmetric tridiagonal matrix: diagonal p_1..p_k, off-diagonal q_1..q_{k-1}.
/// Matrices built from valid shapes have strictly positive off-diagonals, so
/// their eigenvalues are simple.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t dim() const noexcept { return diag.size(); }
};

/// Leading j x j principal submatrix P_j of the reduced (h+1) x (h+1)
/// matrix: zero diagonal, off-diagonals sqrt(q_i^2) from the layer-ratio
/// coupling. Valid for 1 <= j <= h+1.
SymTridiag build_P(const TreeShape& shape, int j);

/// Full-size corner variant P^z_{h+1} for two-root trees: same off-diagonals
/// as P_{h+1} and last diagonal entry (-1)^z_sign / m_0.
SymTridiag build_P_corner(const TreeShape& shape, int z_sign);

/// Number of eigenvalues of t strictly below x, read off the negative pivots
/// of the shifted LDL^T factorization (Sturm count).
int sturm_count(const SymTridiag& t, double x);

/// det(lambda*I - t) by the three-term determinant recursion.
double det_shifted(const SymTridiag& t, double lambda);

/// All dim eigenvalues in ascending order. Each is bracketed by bisection on
/// Sturm counts to width tol*max(1, Gershgorin bound), then polished with a
/// few Newton steps on the determinant recursion.
std::vector<double> eigenvalues_tridiag(const SymTridiag& t, double tol = 1e-13);

} // namespace levelwise

#endif
