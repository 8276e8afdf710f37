#include "levelwise/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "levelwise/charpoly.hpp"

namespace levelwise {

namespace {

std::vector<double> couplings(const TreeShape& shape, int count) {
    const LayerProfile prof = layer_profile(shape);
    std::vector<double> q(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        q[static_cast<std::size_t>(i - 1)] = std::sqrt(coupling_sq(shape, prof, i));
    return q;
}

double gershgorin_bound(const SymTridiag& t) {
    const std::size_t k = t.dim();
    double bound = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.offdiag[i - 1]);
        if (i + 1 < k) row += std::abs(t.offdiag[i]);
        bound = std::max(bound, row);
    }
    return bound;
}

// Determinant recursion value and derivative at lambda, for Newton polish.
void det_and_derivative(const SymTridiag& t, double lambda, double& value, double& deriv) {
    const std::size_t k = t.dim();
    double m0 = 1.0, m1 = lambda - t.diag[0];
    double d0 = 0.0, d1 = 1.0;
    for (std::size_t i = 1; i < k; ++i) {
        const double q2 = t.offdiag[i - 1] * t.offdiag[i - 1];
        const double m2 = (lambda - t.diag[i]) * m1 - q2 * m0;
        const double d2 = m1 + (lambda - t.diag[i]) * d1 - q2 * d0;
        m0 = m1; m1 = m2;
        d0 = d1; d1 = d2;
    }
    value = m1;
    deriv = d1;
}

} // namespace

SymTridiag build_P(const TreeShape& shape, int j) {
    const int h = shape.height();
    if (j < 1 || j > h + 1)
        throw error(errc::index_out_of_range,
                    "P_j index " + std::to_string(j) + " outside [1, " + std::to_string(h + 1) + "]");
    SymTridiag t;
    t.diag.assign(static_cast<std::size_t>(j), 0.0);
    t.offdiag = couplings(shape, j - 1);
    return t;
}

SymTridiag build_P_corner(const TreeShape& shape, int z_sign) {
    if (shape.roots() != 2)
        throw error(errc::wrong_root_count, "corner variants P^z exist only for two-root trees");
    if (z_sign != 1 && z_sign != 2)
        throw error(errc::index_out_of_range, "z_sign must be 1 or 2");
    const int h = shape.height();
    SymTridiag t;
    t.diag.assign(static_cast<std::size_t>(h) + 1, 0.0);
    t.diag.back() = (z_sign == 1 ? -1.0 : 1.0) / shape.degree(0);
    t.offdiag = couplings(shape, h);
    return t;
}

int sturm_count(const SymTridiag& t, double x) {
    const std::size_t k = t.dim();
    const double scale = std::max(1.0, gershgorin_bound(t));
    const double tiny = std::numeric_limits<double>::epsilon() * scale;
    int count = 0;
    double d = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double pivot = t.diag[i] - x;
        if (i > 0) pivot -= t.offdiag[i - 1] * t.offdiag[i - 1] / d;
        if (pivot == 0.0) pivot = -tiny;
        if (pivot < 0.0) ++count;
        d = pivot;
    }
    return count;
}

double det_shifted(const SymTridiag& t, double lambda) {
    double value = 0.0, deriv = 0.0;
    det_and_derivative(t, lambda, value, deriv);
    return value;
}

std::vector<double> eigenvalues_tridiag(const SymTridiag& t, double tol) {
    if (!(tol > 0.0))
        throw error(errc::non_positive_tolerance, "tolerance must be positive");
    const std::size_t k = t.dim();
    const double bound = gershgorin_bound(t);
    const double width = tol * std::max(1.0, bound);
    const double pad = 0.125 * std::max(1.0, bound);

    std::vector<double> eigs(k);
    for (std::size_t idx = 0; idx < k; ++idx) {
        const int want = static_cast<int>(idx) + 1; // count(x) >= want puts lambda_idx below x
        double lo = -bound - pad;
        double hi = bound + pad;
        while (hi - lo > width) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(t, mid) >= want)
                hi = mid;
            else
                lo = mid;
        }
        double x = 0.5 * (lo + hi);
        for (int step = 0; step < 3; ++step) {
            double value = 0.0, deriv = 0.0;
            det_and_derivative(t, x, value, deriv);
            if (deriv == 0.0 || !std::isfinite(value / deriv)) break;
            const double next = x - value / deriv;
            if (next < lo - width || next > hi + width) break;
            x = next;
        }
        eigs[idx] = x;
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

} // namespace levelwise
