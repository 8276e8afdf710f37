#include "levelwise/randic_matrix.hpp"

#include <cmath>
#include <string>

namespace levelwise {

namespace {

void check_dense_cap(std::int64_t n, std::int64_t cap) {
    if (n > cap)
        throw error(errc::dimension_too_large,
                    "dense materialization of dimension " + std::to_string(n) +
                        " refused (cap " + std::to_string(cap) + ")");
}

} // namespace

BlockTemplate block_template(const TreeShape& shape) {
    const LayerProfile prof = layer_profile(shape);
    const int h = shape.height();
    BlockTemplate t;
    t.c_values.reserve(static_cast<std::size_t>(h));
    t.c_repeat.reserve(static_cast<std::size_t>(h));
    for (int j = 1; j <= h; ++j) {
        const double mm = static_cast<double>(shape.degree(h - j)) *
                          static_cast<double>(shape.degree(h - j + 1));
        t.c_values.push_back(1.0 / std::sqrt(mm));
        t.c_repeat.push_back(prof.ratio(j));
    }
    t.omega = (shape.roots() == 2) ? 1.0 / shape.degree(0) : 0.0;
    return t;
}

SymDense assemble_from_edges(const OrderedTree& tree, std::int64_t dense_cap) {
    check_dense_cap(tree.n, dense_cap);
    const std::size_t n = static_cast<std::size_t>(tree.n);
    SymDense r(n);
    for (const auto& [u, v] : tree.edges) {
        const std::size_t iu = static_cast<std::size_t>(u - 1);
        const std::size_t iv = static_cast<std::size_t>(v - 1);
        const double w = 1.0 / std::sqrt(static_cast<double>(tree.degree[iu]) *
                                         static_cast<double>(tree.degree[iv]));
        r.at(iu, iv) = w;
        r.at(iv, iu) = w;
    }
    return r;
}

SymDense assemble_blocked(const TreeShape& shape, std::int64_t dense_cap) {
    const LayerProfile prof = layer_profile(shape);
    check_dense_cap(prof.order, dense_cap);
    const int h = shape.height();
    const BlockTemplate tmpl = block_template(shape);

    SymDense r(static_cast<std::size_t>(prof.order));

    // Row offset of the level-(h-j+1) segment; block j couples it to the
    // next segment down (level h-j).
    std::int64_t row0 = 0;
    for (int j = 1; j <= h; ++j) {
        const std::int64_t rows = prof.size(h - j + 1);
        const std::int64_t col0 = row0 + rows;
        const double c = tmpl.c_values[static_cast<std::size_t>(j - 1)];
        const std::int64_t group = tmpl.c_repeat[static_cast<std::size_t>(j - 1)];
        for (std::int64_t i = 0; i < rows; ++i) {
            const std::size_t ri = static_cast<std::size_t>(row0 + i);
            const std::size_t cj = static_cast<std::size_t>(col0 + i / group);
            r.at(ri, cj) = c;
            r.at(cj, ri) = c;
        }
        row0 = col0;
    }
    if (shape.roots() == 2) {
        const std::size_t n = static_cast<std::size_t>(prof.order);
        r.at(n - 2, n - 1) = tmpl.omega;
        r.at(n - 1, n - 2) = tmpl.omega;
    }
    return r;
}

double block_gram_check(const TreeShape& shape, int j, std::int64_t dense_cap) {
    const int h = shape.height();
    if (j < 1 || j > h)
        throw error(errc::index_out_of_range,
                    "block index " + std::to_string(j) + " outside [1, " + std::to_string(h) + "]");
    const LayerProfile prof = layer_profile(shape);
    const std::int64_t rows = prof.size(h - j + 1);
    const std::int64_t cols = prof.size(h - j);
    check_dense_cap(rows, dense_cap);

    const BlockTemplate tmpl = block_template(shape);
    const double c = tmpl.c_values[static_cast<std::size_t>(j - 1)];
    const std::int64_t group = tmpl.c_repeat[static_cast<std::size_t>(j - 1)];

    std::vector<double> b(static_cast<std::size_t>(rows * cols), 0.0);
    for (std::int64_t i = 0; i < rows; ++i)
        b[static_cast<std::size_t>(i * cols + i / group)] = c;

    const double expected = static_cast<double>(group) /
                            (static_cast<double>(shape.degree(h - j)) *
                             static_cast<double>(shape.degree(h - j + 1)));

    for (std::int64_t p = 0; p < cols; ++p) {
        for (std::int64_t q = 0; q < cols; ++q) {
            double g = 0.0;
            for (std::int64_t i = 0; i < rows; ++i)
                g += b[static_cast<std::size_t>(i * cols + p)] *
                     b[static_cast<std::size_t>(i * cols + q)];
            const double want = (p == q) ? expected : 0.0;
            if (std::abs(g - want) > 1e-14)
                throw std::logic_error("B_j^T B_j deviates from its scalar identity form at (" +
                                       std::to_string(p) + ", " + std::to_string(q) + ")");
        }
    }
    return expected;
}

} // namespace levelwise
