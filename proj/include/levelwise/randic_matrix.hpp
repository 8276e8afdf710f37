#ifndef LEVELWISE_RANDIC_MATRIX_HPP
#define LEVELWISE_RANDIC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "levelwise/tree.hpp"

namespace levelwise {

/// Dense symmetric matrix, row-major full storage. Only used on the oracle
/// side of the project: the spectral fast path never materializes one.
class SymDense {
public:
    SymDense() = default;
    explicit SymDense(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t dim() const noexcept { return n_; }
    double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double* data() noexcept { return a_.data(); }
    const double* data() const noexcept { return a_.data(); }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

inline constexpr std::int64_t kDefaultDenseCap = 5000;

/// The implicit description of the block-tridiagonal Randic matrix: for each
/// block index j in [1,h], the repeated column entry c_j = 1/sqrt(m_{h-j} m_{h-j+1})
/// and its repeat count |L_{h-j+1}|/|L_{h-j}|, plus the root-root coupling.
struct BlockTemplate {
    std::vector<double> c_values;       // c_values[j-1] = c_j
    std::vector<std::int64_t> c_repeat; // c_repeat[j-1] = |L_{h-j+1}|/|L_{h-j}|
    double omega = 0.0;                 // 0 for one root, 1/m_0 for two
};

BlockTemplate block_template(const TreeShape& shape);

/// R from the edge list: entry 1/sqrt(d_u d_v) for every edge (u,v).
SymDense assemble_from_edges(const OrderedTree& tree, std::int64_t dense_cap = kDefaultDenseCap);

/// R from the block template alone, no graph traversal. Must equal
/// assemble_from_edges(build_ordered_tree(shape)) entrywise.
SymDense assemble_blocked(const TreeShape& shape, std::int64_t dense_cap = kDefaultDenseCap);

/// Builds the j-th rectangular block B_j explicitly, forms B_j^T B_j and
/// checks it is (|L_{h-j+1}|/|L_{h-j}|) / (m_{h-j} m_{h-j+1}) times the
/// identity to 1e-14. Returns that scalar.
double block_gram_check(const TreeShape& shape, int j, std::int64_t dense_cap = kDefaultDenseCap);

} // namespace levelwise

#endif
