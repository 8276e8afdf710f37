#include "levelwise/verify.hpp"

#include <algorithm>
#include <cmath>

#include "levelwise/oracle.hpp"

namespace levelwise {

std::int64_t merged_zero_multiplicity(const SpectrumReport& report) {
    std::int64_t mult = 0;
    for (const auto& [value, m] : report.pairs)
        if (std::abs(value) <= 1e-9) mult += m;
    return mult;
}

VerifySummary verify_shape(const TreeShape& shape, double tol, std::int64_t dense_cap) {
    VerifySummary v;

    const SpectrumReport report = full_spectrum(shape, tol);
    v.order = report.order_check;

    const OrderedTree tree = build_ordered_tree(shape);
    const SymDense from_edges = assemble_from_edges(tree, dense_cap);
    const SymDense blocked = assemble_blocked(shape, dense_cap);
    const std::size_t n = from_edges.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v.assembly_max_abs_diff =
                std::max(v.assembly_max_abs_diff, std::abs(from_edges.at(i, j) - blocked.at(i, j)));
    v.assembly_ok = v.assembly_max_abs_diff == 0.0;

    const DenseSpectrum oracle = dense_eigen_symmetric(from_edges, 1e-12, dense_cap);
    std::vector<double> fast;
    fast.reserve(n);
    for (const auto& [value, mult] : report.pairs)
        for (std::int64_t k = 0; k < mult; ++k) fast.push_back(value);
    std::sort(fast.begin(), fast.end());
    for (std::size_t i = 0; i < n; ++i)
        v.eigen_max_abs_diff = std::max(v.eigen_max_abs_diff,
                                        std::abs(fast[i] - oracle.values[i]));
    v.eigen_ok = v.eigen_max_abs_diff <= kVerifyEigenTol;

    v.zero_mult_closed = zero_multiplicity(shape);
    v.zero_mult_merged = merged_zero_multiplicity(report);
    std::int64_t zero_oracle = 0;
    for (double value : oracle.values)
        if (std::abs(value) <= kVerifyNullityTol) ++zero_oracle;
    v.zero_mult_oracle = zero_oracle;
    v.zero_ok = v.zero_mult_closed == v.zero_mult_merged && v.zero_mult_closed == v.zero_mult_oracle;

    double trace = 0.0, trace_sq = 0.0;
    for (const auto& [value, mult] : report.pairs) {
        trace += static_cast<double>(mult) * value;
        trace_sq += static_cast<double>(mult) * value * value;
    }
    v.trace_abs = std::abs(trace);
    v.trace_sq_abs_err = std::abs(trace_sq - 2.0 * report.randic_index_minus_one);
    const double nd = static_cast<double>(v.order);
    v.trace_ok = v.trace_abs <= 1e-9 * nd && v.trace_sq_abs_err <= 1e-8 * nd;

    return v;
}

} // namespace levelwise
