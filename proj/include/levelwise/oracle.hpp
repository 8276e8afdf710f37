#ifndef LEVELWISE_ORACLE_HPP
#define LEVELWISE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "levelwise/randic_matrix.hpp"

namespace levelwise {

/// Brute-force ground truth, used only by tests and verify mode. Kept free
/// of any code shared with the spectral fast path.
struct DenseSpectrum {
    std::vector<double> values; // ascending
    int iterations = 0;         // Jacobi sweeps used
};

/// Eigenvalues by cyclic-by-row Jacobi rotations until the off-diagonal
/// Frobenius norm drops below tol * ||A||_F.
DenseSpectrum dense_eigen_symmetric(const SymDense& m, double tol = 1e-12,
                                    std::int64_t dense_cap = kDefaultDenseCap);

struct DenseDet {
    double value = 0.0;   // may overflow to +-inf; sign/log_abs stay exact
    int sign = 0;
    double log_abs = 0.0; // -inf when singular
};

/// det(shift*I - m) by LU with partial pivoting.
DenseDet dense_det(const SymDense& m, double shift, std::int64_t dense_cap = kDefaultDenseCap);

/// Number of oracle eigenvalues with |lambda| <= tol.
std::int64_t nullity(const SymDense& m, double tol, std::int64_t dense_cap = kDefaultDenseCap);

} // namespace levelwise

#endif
