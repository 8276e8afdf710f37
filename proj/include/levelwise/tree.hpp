#ifndef LEVELWISE_TREE_HPP
#define LEVELWISE_TREE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "levelwise/errors.hpp"

namespace levelwise {

/// A validated degree sequence (m_0, ..., m_{h-1}) plus the root count z.
///
/// Vertices at distance i from the root set have degree m_i; leaves sit at
/// level h and have the implicit degree m_h = 1, which is never stored but
/// available through degree(h). Construction enforces the degree floors
/// (m_0 >= 2 for z = 1, m_0 >= 3 for z = 2, interior m_i >= 2), so every
/// TreeShape in circulation describes a realizable tree.
class TreeShape {
public:
    TreeShape(std::vector<int> degrees, int roots);

    int height() const noexcept { return static_cast<int>(degrees_.size()); }
    int roots() const noexcept { return roots_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }

    /// m_i for 0 <= i <= h; degree(h) is the implicit leaf degree 1.
    int degree(int level) const;

private:
    std::vector<int> degrees_;
    int roots_;
};

TreeShape validate_shape(std::vector<int> degrees, int roots);

/// Layer sizes |L_0|, ..., |L_h|, the order n, and the index set psi of
/// levels j in [1,h] with |L_{h-j+1}| > |L_{h-j}|.
struct LayerProfile {
    std::vector<std::int64_t> sizes;
    std::int64_t order = 0;
    std::vector<int> psi;

    std::int64_t size(int level) const { return sizes.at(static_cast<std::size_t>(level)); }
    bool psi_contains(int j) const;
    /// |L_{h-j+1}| / |L_{h-j}|, the sibling-group width at block index j.
    std::int64_t ratio(int j) const;
    /// |L_{h-j+1}| - |L_{h-j}|, the block multiplicity of sigma(P_j).
    std::int64_t block_multiplicity(int j) const;
};

/// Computes layer sizes by the growth recurrence and the order both as the
/// layer sum and by the closed form; the two totals must agree exactly.
/// Throws errc::order_overflow if n does not fit in 64-bit arithmetic.
LayerProfile layer_profile(const TreeShape& shape);

/// The materialized tree in the canonical vertex ordering: level h first,
/// then level h-1, ..., with the root(s) last. Vertices are 1-based.
struct OrderedTree {
    std::int64_t n = 0;
    std::vector<int> degree;                                // degree[v-1]
    std::vector<int> level_of;                              // level_of[v-1]
    std::vector<std::pair<std::int32_t, std::int32_t>> edges; // (u, v), u < v
};

inline constexpr std::int64_t kDefaultTreeVertexCap = 10'000'000;

/// Builds the tree with siblings contiguous and group g of each level
/// attached to vertex g of the next level, which is exactly the layout the
/// block form of the Randic matrix assumes. Deterministic; the result is
/// checked for connectivity and acyclicity before it is returned.
OrderedTree build_ordered_tree(const TreeShape& shape,
                               std::int64_t max_vertices = kDefaultTreeVertexCap);

} // namespace levelwise

#endif
