#ifndef LEVELWISE_VERIFY_HPP
#define LEVELWISE_VERIFY_HPP

#include <cstdint>

#include "levelwise/randic_matrix.hpp"
#include "levelwise/spectrum.hpp"
#include "levelwise/tree.hpp"

namespace levelwise {

/// Cross-check of the spectral fast path against the dense oracle. Each
/// field is reported even when its check fails; ok() is the overall gate.
struct VerifySummary {
    double assembly_max_abs_diff = 0.0; // blocked vs edge-list assembly
    double eigen_max_abs_diff = 0.0;    // sorted eigenvalue multisets, elementwise
    std::int64_t zero_mult_closed = 0;
    std::int64_t zero_mult_merged = 0;
    std::int64_t zero_mult_oracle = 0;
    double trace_abs = 0.0;             // |sum mult * lambda|
    double trace_sq_abs_err = 0.0;      // |sum mult * lambda^2 - 2 R_{-1}|
    std::int64_t order = 0;

    bool assembly_ok = false;
    bool eigen_ok = false;
    bool zero_ok = false;
    bool trace_ok = false;

    bool ok() const { return assembly_ok && eigen_ok && zero_ok && trace_ok; }
};

inline constexpr double kVerifyEigenTol = 1e-8;
inline constexpr double kVerifyNullityTol = 1e-7;

/// Runs the fast path and the dense oracle side by side: both matrix
/// assemblies entrywise, eigenvalue multisets elementwise, the three
/// zero-multiplicity counts, and the trace identities.
VerifySummary verify_shape(const TreeShape& shape, double tol = kDefaultEigenTol,
                           std::int64_t dense_cap = kDefaultDenseCap);

/// Multiplicity of the merged eigenvalue 0 in an existing report.
std::int64_t merged_zero_multiplicity(const SpectrumReport& report);

} // namespace levelwise

#endif
