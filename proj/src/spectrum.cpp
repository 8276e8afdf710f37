#include "levelwise/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace levelwise {

const char* submatrix_kind_name(SubmatrixKind kind) noexcept {
    switch (kind) {
        case SubmatrixKind::P: return "P";
        case SubmatrixKind::P1: return "P1";
        case SubmatrixKind::P2: return "P2";
    }
    return "?";
}

namespace {

struct Candidate {
    double value;
    std::int64_t mult;
    int j;
};

double merge_radius(double value) { return 1e-9 * std::max(1.0, std::abs(value)); }

} // namespace

SpectrumReport full_spectrum(const TreeShape& shape, double tol) {
    if (!(tol > 0.0))
        throw error(errc::non_positive_tolerance, "tolerance must be positive");
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);

    SpectrumReport report;
    report.order_check = prof.order;

    std::vector<Candidate> candidates;
    auto add_block = [&](int j, SubmatrixKind kind, SymTridiag t, std::int64_t mult) {
        SubmatrixRecord rec;
        rec.j = j;
        rec.kind = kind;
        rec.size = static_cast<int>(t.dim());
        rec.eigenvalues = eigenvalues_tridiag(t, tol);
        rec.block_multiplicity = mult;
        for (double v : rec.eigenvalues) candidates.push_back({v, mult, j});
        report.submatrices.push_back(std::move(rec));
    };

    for (int j : prof.psi)
        add_block(j, SubmatrixKind::P, build_P(shape, j), prof.block_multiplicity(j));
    if (shape.roots() == 1) {
        add_block(h + 1, SubmatrixKind::P, build_P(shape, h + 1), 1);
    } else {
        add_block(h + 1, SubmatrixKind::P1, build_P_corner(shape, 1), 1);
        add_block(h + 1, SubmatrixKind::P2, build_P_corner(shape, 2), 1);
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

    // Block multiplicities are lower bounds: the same eigenvalue may surface
    // from several blocks, so coincident values are coalesced. The
    // representative comes from the heaviest contributor (ties to the
    // smallest block), which keeps exact values like 0 exact.
    std::vector<std::pair<double, std::int64_t>> merged;
    std::size_t i = 0;
    while (i < candidates.size()) {
        std::size_t end = i + 1;
        double last = candidates[i].value;
        while (end < candidates.size() &&
               candidates[end].value - last <= merge_radius(candidates[end].value)) {
            last = candidates[end].value;
            ++end;
        }
        const Candidate* rep = &candidates[i];
        std::int64_t mult = 0;
        for (std::size_t k = i; k < end; ++k) {
            mult += candidates[k].mult;
            if (candidates[k].mult > rep->mult ||
                (candidates[k].mult == rep->mult && candidates[k].j < rep->j))
                rep = &candidates[k];
        }
        merged.emplace_back(rep->value, mult);
        i = end;
    }

    for (std::size_t k = 1; k < merged.size(); ++k) {
        const double gap = merged[k].first - merged[k - 1].first;
        if (gap <= 100.0 * merge_radius(merged[k].first)) ++report.near_merge_pairs;
    }

    std::int64_t total = 0;
    for (const auto& [value, mult] : merged) total += mult;
    if (total != prof.order)
        throw error(errc::multiplicity_mismatch,
                    "multiplicities sum to " + std::to_string(total) + ", expected n = " +
                        std::to_string(prof.order));

    report.pairs.assign(merged.rbegin(), merged.rend());

    report.randic_index_half = randic_index(shape, RandicExponent::minus_half);
    report.randic_index_minus_one = randic_index(shape, RandicExponent::minus_one);
    report.randic_energy = 0.0;
    for (const auto& [value, mult] : report.pairs)
        report.randic_energy += static_cast<double>(mult) * std::abs(value);

    return report;
}

std::int64_t zero_multiplicity(const TreeShape& shape) {
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);
    std::int64_t count = 0;
    for (int j : prof.psi)
        if (j % 2 == 1) count += prof.block_multiplicity(j);
    // 0 is an eigenvalue of the zero-diagonal corner matrix P_{h+1} exactly
    // when its size h+1 is odd. The two-root corner variants P^z contribute
    // nothing: at 0 exactly one of phi_h, phi_{h+1} vanishes (consecutive
    // indices have opposite parity), so phi_{h+1} -+ phi_h/m_0 cannot be 0.
    if (shape.roots() == 1 && h % 2 == 0) ++count;
    return count;
}

double randic_index(const TreeShape& shape, RandicExponent exponent) {
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);
    double sum = 0.0;
    for (int i = 0; i < h; ++i) {
        const double mm = static_cast<double>(shape.degree(i)) *
                          static_cast<double>(shape.degree(i + 1));
        const double w = (exponent == RandicExponent::minus_half) ? 1.0 / std::sqrt(mm) : 1.0 / mm;
        sum += static_cast<double>(prof.size(i + 1)) * w;
    }
    if (shape.roots() == 2) {
        const double mm = static_cast<double>(shape.degree(0)) *
                          static_cast<double>(shape.degree(0));
        sum += (exponent == RandicExponent::minus_half) ? 1.0 / std::sqrt(mm) : 1.0 / mm;
    }
    return sum;
}

double randic_energy(const TreeShape& shape, double tol) {
    return full_spectrum(shape, tol).randic_energy;
}

} // namespace levelwise
