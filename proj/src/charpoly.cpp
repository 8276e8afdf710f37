#include "levelwise/charpoly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace levelwise {

double coupling_sq(const TreeShape& shape, const LayerProfile& prof, int j) {
    const int h = shape.height();
    if (j < 1 || j > h)
        throw error(errc::index_out_of_range,
                    "coupling index " + std::to_string(j) + " outside [1, " + std::to_string(h) + "]");
    const double num = static_cast<double>(prof.size(h - j + 1));
    const double den = static_cast<double>(prof.size(h - j)) *
                       static_cast<double>(shape.degree(h - j + 1)) *
                       static_cast<double>(shape.degree(h - j));
    return num / den;
}

double coupling_sq_simplified(const TreeShape& shape, int j, bool& applies) {
    const int h = shape.height();
    applies = (j >= 1 && j < h) || (j == h && shape.roots() == 2);
    if (!applies) return 0.0;
    return static_cast<double>(shape.degree(h - j) - 1) /
           (static_cast<double>(shape.degree(h - j + 1)) * static_cast<double>(shape.degree(h - j)));
}

PhiSequence phi_sequence(const TreeShape& shape, double lambda) {
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);

    PhiSequence seq;
    seq.point = lambda;
    seq.values.resize(static_cast<std::size_t>(h) + 2);
    seq.values[0] = 1.0;
    seq.values[1] = lambda;
    for (int j = 2; j <= h + 1; ++j) {
        const double q2 = coupling_sq(shape, prof, j - 1);
        bool applies = false;
        const double q2s = coupling_sq_simplified(shape, j - 1, applies);
        if (applies && std::abs(q2 - q2s) > 1e-15 * q2)
            throw std::logic_error("layer-ratio and (m-1)/(mm') coupling forms disagree at j = " +
                                   std::to_string(j - 1));
        seq.values[static_cast<std::size_t>(j)] =
            lambda * seq.values[static_cast<std::size_t>(j - 1)] -
            q2 * seq.values[static_cast<std::size_t>(j - 2)];
    }
    return seq;
}

double char_poly_eval(const TreeShape& shape, double lambda) {
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);
    const PhiSequence phi = phi_sequence(shape, lambda);

    double det;
    if (shape.roots() == 1) {
        det = phi.at(h + 1);
    } else {
        const double root_term = phi.at(h) / shape.degree(0);
        det = (phi.at(h + 1) - root_term) * (phi.at(h + 1) + root_term);
    }
    for (int j : prof.psi)
        det *= std::pow(phi.at(j), static_cast<double>(prof.block_multiplicity(j)));
    return det;
}

namespace {

void accumulate_factor(double value, double exponent, int& sign, double& log_abs) {
    if (sign == 0) return;
    if (value == 0.0) {
        sign = 0;
        log_abs = -std::numeric_limits<double>::infinity();
        return;
    }
    if (value < 0.0 && std::fmod(exponent, 2.0) != 0.0) sign = -sign;
    log_abs += exponent * std::log(std::abs(value));
}

} // namespace

CharPolyLog char_poly_log_eval(const TreeShape& shape, double lambda) {
    const int h = shape.height();
    const LayerProfile prof = layer_profile(shape);
    const PhiSequence phi = phi_sequence(shape, lambda);

    CharPolyLog out;
    out.sign = 1;
    out.log_abs = 0.0;
    if (shape.roots() == 1) {
        accumulate_factor(phi.at(h + 1), 1.0, out.sign, out.log_abs);
    } else {
        const double root_term = phi.at(h) / shape.degree(0);
        accumulate_factor(phi.at(h + 1) - root_term, 1.0, out.sign, out.log_abs);
        accumulate_factor(phi.at(h + 1) + root_term, 1.0, out.sign, out.log_abs);
    }
    for (int j : prof.psi)
        accumulate_factor(phi.at(j), static_cast<double>(prof.block_multiplicity(j)), out.sign,
                          out.log_abs);
    if (out.sign == 0) out.log_abs = -std::numeric_limits<double>::infinity();
    return out;
}

} // namespace levelwise
