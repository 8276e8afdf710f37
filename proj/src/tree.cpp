#include "levelwise/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace levelwise {

TreeShape::TreeShape(std::vector<int> degrees, int roots)
    : degrees_(std::move(degrees)), roots_(roots) {
    if (degrees_.empty())
        throw error(errc::empty_degrees, "degree sequence must contain at least m_0");
    if (roots_ != 1 && roots_ != 2)
        throw error(errc::root_count_not_one_or_two,
                    "root count must be 1 or 2, got " + std::to_string(roots_));
    const int floor0 = (roots_ == 1) ? 2 : 3;
    if (degrees_[0] < floor0)
        throw error(errc::root_degree_too_small,
                    "m_0 = " + std::to_string(degrees_[0]) + " below the minimum " +
                        std::to_string(floor0) + " for " + std::to_string(roots_) + " root(s)");
    for (std::size_t i = 1; i < degrees_.size(); ++i) {
        if (degrees_[i] < 2)
            throw error(errc::internal_degree_too_small,
                        "m_" + std::to_string(i) + " = " + std::to_string(degrees_[i]) +
                            " but interior levels need degree >= 2");
    }
}

int TreeShape::degree(int level) const {
    if (level < 0 || level > height())
        throw error(errc::index_out_of_range,
                    "level " + std::to_string(level) + " outside [0, " +
                        std::to_string(height()) + "]");
    return level == height() ? 1 : degrees_[static_cast<std::size_t>(level)];
}

TreeShape validate_shape(std::vector<int> degrees, int roots) {
    return TreeShape(std::move(degrees), roots);
}

bool LayerProfile::psi_contains(int j) const {
    return std::binary_search(psi.begin(), psi.end(), j);
}

std::int64_t LayerProfile::ratio(int j) const {
    const int h = static_cast<int>(sizes.size()) - 1;
    if (j < 1 || j > h)
        throw error(errc::index_out_of_range, "block index " + std::to_string(j));
    return sizes[static_cast<std::size_t>(h - j + 1)] / sizes[static_cast<std::size_t>(h - j)];
}

std::int64_t LayerProfile::block_multiplicity(int j) const {
    const int h = static_cast<int>(sizes.size()) - 1;
    if (j < 1 || j > h)
        throw error(errc::index_out_of_range, "block index " + std::to_string(j));
    return sizes[static_cast<std::size_t>(h - j + 1)] - sizes[static_cast<std::size_t>(h - j)];
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw error(errc::order_overflow, "layer size exceeds 64-bit range");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw error(errc::order_overflow, "order exceeds 64-bit range");
    return out;
}

// The closed-form order: kept free of the layer recurrence so the two
// totals are independent integer computations.
std::int64_t closed_form_order(const TreeShape& shape) {
    const auto& m = shape.degrees();
    const int h = shape.height();
    if (shape.roots() == 1) {
        // 1 + m_0 + m_0 * sum_{t=1}^{h-1} prod_{k=1}^{t} (m_k - 1)
        std::int64_t n = checked_add(1, m[0]);
        std::int64_t prod = 1;
        for (int t = 1; t <= h - 1; ++t) {
            prod = checked_mul(prod, m[static_cast<std::size_t>(t)] - 1);
            n = checked_add(n, checked_mul(m[0], prod));
        }
        return n;
    }
    // 2 + 2 * sum_{t=0}^{h-1} prod_{k=0}^{t} (m_k - 1)
    std::int64_t n = 2;
    std::int64_t prod = 1;
    for (int t = 0; t <= h - 1; ++t) {
        prod = checked_mul(prod, m[static_cast<std::size_t>(t)] - 1);
        n = checked_add(n, checked_mul(2, prod));
    }
    return n;
}

} // namespace

LayerProfile layer_profile(const TreeShape& shape) {
    const int h = shape.height();
    LayerProfile p;
    p.sizes.resize(static_cast<std::size_t>(h) + 1);
    p.sizes[0] = shape.roots();
    p.sizes[1] = (shape.roots() == 1) ? shape.degree(0)
                                      : 2 * static_cast<std::int64_t>(shape.degree(0) - 1);
    for (int i = 1; i <= h - 1; ++i)
        p.sizes[static_cast<std::size_t>(i) + 1] =
            checked_mul(p.sizes[static_cast<std::size_t>(i)], shape.degree(i) - 1);

    p.order = 0;
    for (std::int64_t s : p.sizes) p.order = checked_add(p.order, s);

    const std::int64_t closed = closed_form_order(shape);
    if (closed != p.order)
        throw std::logic_error("layer sum " + std::to_string(p.order) +
                               " disagrees with closed-form order " + std::to_string(closed));

    for (int j = 1; j <= h; ++j)
        if (p.sizes[static_cast<std::size_t>(h - j + 1)] > p.sizes[static_cast<std::size_t>(h - j)])
            p.psi.push_back(j);
    return p;
}

OrderedTree build_ordered_tree(const TreeShape& shape, std::int64_t max_vertices) {
    const LayerProfile prof = layer_profile(shape);
    if (prof.order > max_vertices)
        throw error(errc::order_overflow,
                    "order " + std::to_string(prof.order) + " exceeds the vertex cap " +
                        std::to_string(max_vertices));

    const int h = shape.height();
    const std::int64_t n = prof.order;

    OrderedTree t;
    t.n = n;
    t.degree.resize(static_cast<std::size_t>(n));
    t.level_of.resize(static_cast<std::size_t>(n));
    t.edges.reserve(static_cast<std::size_t>(n - 1));

    // seg_start[i] = 1-based index of the first vertex of level i; level h
    // occupies the front of the ordering and level 0 the back.
    std::vector<std::int64_t> seg_start(static_cast<std::size_t>(h) + 1);
    {
        std::int64_t acc = 1;
        for (int i = h; i >= 0; --i) {
            seg_start[static_cast<std::size_t>(i)] = acc;
            acc += prof.sizes[static_cast<std::size_t>(i)];
        }
    }

    for (int i = 0; i <= h; ++i) {
        const std::int64_t s = seg_start[static_cast<std::size_t>(i)];
        for (std::int64_t g = 0; g < prof.sizes[static_cast<std::size_t>(i)]; ++g) {
            t.level_of[static_cast<std::size_t>(s + g - 1)] = i;
            t.degree[static_cast<std::size_t>(s + g - 1)] = shape.degree(i);
        }
    }

    // Children of level i+1 come in |L_{i+1}|/|L_i| contiguous sibling groups;
    // group g attaches to the g-th vertex of level i.
    for (int child_level = h; child_level >= 1; --child_level) {
        const std::int64_t child_count = prof.sizes[static_cast<std::size_t>(child_level)];
        const std::int64_t parent_count = prof.sizes[static_cast<std::size_t>(child_level - 1)];
        const std::int64_t group = child_count / parent_count;
        const std::int64_t cs = seg_start[static_cast<std::size_t>(child_level)];
        const std::int64_t ps = seg_start[static_cast<std::size_t>(child_level - 1)];
        for (std::int64_t c = 0; c < child_count; ++c) {
            const std::int64_t parent = ps + c / group;
            t.edges.emplace_back(static_cast<std::int32_t>(cs + c),
                                 static_cast<std::int32_t>(parent));
        }
    }
    if (shape.roots() == 2)
        t.edges.emplace_back(static_cast<std::int32_t>(n - 1), static_cast<std::int32_t>(n));

    // Union-find sanity pass: n-1 edges joining n vertices into one
    // component with no cycle.
    if (static_cast<std::int64_t>(t.edges.size()) != n - 1)
        throw std::logic_error("edge count is not n-1");
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [u, v] : t.edges) {
        if (!(u >= 1 && v >= 1 && u < v && v <= n))
            throw std::logic_error("edge endpoints out of order");
        const std::int32_t ru = find(u - 1);
        const std::int32_t rv = find(v - 1);
        if (ru == rv) throw std::logic_error("cycle detected while building tree");
        parent[static_cast<std::size_t>(ru)] = rv;
    }

    return t;
}

} // namespace levelwise
