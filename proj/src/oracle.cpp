#include "levelwise/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace levelwise {

namespace {

void check_cap(std::size_t n, std::int64_t cap) {
    if (static_cast<std::int64_t>(n) > cap)
        throw error(errc::dimension_too_large,
                    "dense solve of dimension " + std::to_string(n) + " refused (cap " +
                        std::to_string(cap) + ")");
}

double frobenius(const SymDense& m) {
    const std::size_t n = m.dim();
    double sum = 0.0;
    const double* a = m.data();
    for (std::size_t i = 0; i < n * n; ++i) sum += a[i] * a[i];
    return std::sqrt(sum);
}

double off_frobenius(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * sum);
}

} // namespace

DenseSpectrum dense_eigen_symmetric(const SymDense& m, double tol, std::int64_t dense_cap) {
    const std::size_t n = m.dim();
    check_cap(n, dense_cap);

    double max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(m.at(i, j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-14 * std::max(1.0, max_abs))
                throw error(errc::not_symmetric, "matrix is not symmetric at (" +
                                                     std::to_string(i) + ", " + std::to_string(j) + ")");

    DenseSpectrum result;
    if (n == 0) return result;

    std::vector<double> a(m.data(), m.data() + n * n);
    const double norm = frobenius(m);
    const double target = tol * std::max(norm, std::numeric_limits<double>::min());

    // Only the upper triangle is maintained; rotations touch the three index
    // ranges k < p, p < k < q, q < k of row/column p and q.
    auto apply = [](double& x, double& y, double s, double tau) {
        const double g = x;
        const double h = y;
        x = g - s * (h + tau * g);
        y = h + s * (g - tau * h);
    };

    int sweep = 0;
    for (; sweep < 100; ++sweep) {
        double off_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off_sum += std::abs(a[i * n + j]);
        if (off_frobenius(a, n) <= target) break;
        // Early sweeps skip entries below the classic cyclic threshold.
        const double tresh = (sweep < 3) ? 0.2 * off_sum / (static_cast<double>(n) * n) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0 || std::abs(apq) <= tresh) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Entries negligible against their diagonals are flushed so
                // the sweep terminates instead of churning on roundoff.
                if (std::abs(apq) <=
                    std::numeric_limits<double>::epsilon() * 1e-2 * (std::abs(app) + std::abs(aqq))) {
                    a[p * n + q] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;

                for (std::size_t k = 0; k < p; ++k) apply(a[k * n + p], a[k * n + q], s, tau);
                for (std::size_t k = p + 1; k < q; ++k) apply(a[p * n + k], a[k * n + q], s, tau);
                for (std::size_t k = q + 1; k < n; ++k) apply(a[p * n + k], a[q * n + k], s, tau);
            }
        }
    }
    if (off_frobenius(a, n) > target)
        throw error(errc::no_convergence, "Jacobi did not converge within 100 sweeps");

    result.iterations = sweep;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.values[i] = a[i * n + i];
    std::sort(result.values.begin(), result.values.end());
    return result;
}

DenseDet dense_det(const SymDense& m, double shift, std::int64_t dense_cap) {
    const std::size_t n = m.dim();
    check_cap(n, dense_cap);

    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i == j ? shift : 0.0) - m.at(i, j);

    DenseDet det;
    det.sign = 1;
    det.log_abs = 0.0;
    det.value = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) {
            det.sign = 0;
            det.log_abs = -std::numeric_limits<double>::infinity();
            det.value = 0.0;
            return det;
        }
        if (pivot != col) {
            for (std::size_t k = col; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
            det.sign = -det.sign;
            det.value = -det.value;
        }
        const double d = a[col * n + col];
        if (d < 0.0) det.sign = -det.sign;
        det.log_abs += std::log(std::abs(d));
        det.value *= d;
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / d;
            if (f == 0.0) continue;
            for (std::size_t k = col + 1; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
        }
    }
    return det;
}

std::int64_t nullity(const SymDense& m, double tol, std::int64_t dense_cap) {
    const DenseSpectrum s = dense_eigen_symmetric(m, 1e-12, dense_cap);
    std::int64_t count = 0;
    for (double v : s.values)
        if (std::abs(v) <= tol) ++count;
    return count;
}

} // namespace levelwise
