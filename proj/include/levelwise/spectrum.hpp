#ifndef LEVELWISE_SPECTRUM_HPP
#define LEVELWISE_SPECTRUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "levelwise/tree.hpp"
#include "levelwise/tridiag.hpp"

namespace levelwise {

enum class SubmatrixKind { P, P1, P2 };

const char* submatrix_kind_name(SubmatrixKind kind) noexcept;

/// One reduced eigenproblem contributing to the spectrum: P_j for j in psi,
/// plus the full-size matrix (one root) or the two corner variants (two
/// roots).
struct SubmatrixRecord {
    int j = 0;
    SubmatrixKind kind = SubmatrixKind::P;
    int size = 0;
    std::vector<double> eigenvalues; // ascending
    std::int64_t block_multiplicity = 0;
};

/// The complete Randic spectrum with exact multiplicities plus the derived
/// graph invariants.
struct SpectrumReport {
    std::vector<std::pair<double, std::int64_t>> pairs; // descending by eigenvalue
    std::int64_t order_check = 0;
    double randic_index_half = 0.0;      // exponent -1/2 edge sum
    double randic_index_minus_one = 0.0; // exponent -1 edge sum
    double randic_energy = 0.0;          // sum of mult * |lambda|
    std::vector<SubmatrixRecord> submatrices;
    // Distinct merged eigenvalue pairs separated by less than 100x the merge
    // radius; nonzero values flag shapes where the merge decision was close.
    int near_merge_pairs = 0;
};

inline constexpr double kDefaultEigenTol = 1e-13;

/// Solves every reduced eigenproblem, attaches block multiplicities
/// (|L_{h-j+1}| - |L_{h-j}| for j in psi, 1 for the full-size matrices),
/// merges coincident eigenvalues across blocks, and checks the multiplicity
/// total against n. Never touches a matrix of size n.
SpectrumReport full_spectrum(const TreeShape& shape, double tol = kDefaultEigenTol);

/// Closed-form multiplicity of 0: sum over odd j in psi of the block
/// multiplicity, plus 1 for one-root trees of even height (the corner
/// matrix P_{h+1} is then odd-sized with zero diagonal; the two-root corner
/// variants never vanish at 0).
std::int64_t zero_multiplicity(const TreeShape& shape);

enum class RandicExponent { minus_half, minus_one };

/// Edge-weight sum over the tree in closed layer form:
/// sum_i |L_{i+1}| (m_i m_{i+1})^e, plus (m_0^2)^e for the root-root edge.
double randic_index(const TreeShape& shape, RandicExponent exponent);

/// Sum of mult * |lambda| over the full spectrum.
double randic_energy(const TreeShape& shape, double tol = kDefaultEigenTol);

} // namespace levelwise

#endif
