#ifndef LEVELWISE_CHARPOLY_HPP
#define LEVELWISE_CHARPOLY_HPP

#include <vector>

#include "levelwise/tree.hpp"

namespace levelwise {

/// Squared coupling q_j^2 = |L_{h-j+1}| / (|L_{h-j}| m_{h-j+1} m_{h-j}) for
/// j in [1,h]. This layer-ratio form is the single source of truth; the
/// (m-1)/(m m') simplification is derived from it where it applies.
double coupling_sq(const TreeShape& shape, const LayerProfile& prof, int j);

/// The simplified coupling (m_{h-j} - 1) / (m_{h-j+1} m_{h-j}). Valid for
/// j < h for every shape, and for j = h only with two roots (|L_1|/|L_0|
/// collapses to m_0 - 1 there, but to m_0 for one root). Returns false in
/// `applies` outside that range.
double coupling_sq_simplified(const TreeShape& shape, int j, bool& applies);

/// phi_0..phi_{h+1} evaluated at one point by the three-term recursion
/// phi_j = lambda*phi_{j-1} - q_{j-1}^2 * phi_{j-2}.
struct PhiSequence {
    std::vector<double> values; // h + 2 entries
    double point = 0.0;

    double at(int j) const { return values.at(static_cast<std::size_t>(j)); }
};

PhiSequence phi_sequence(const TreeShape& shape, double lambda);

/// det(lambda*I - R(T^z)) through the factored form: the corner factor(s)
/// times prod_{j in psi} phi_j^(|L_{h-j+1}| - |L_{h-j}|). Evaluates without
/// any matrix of size n; may overflow to +-inf for large trees, in which
/// case char_poly_log_eval is the usable variant.
double char_poly_eval(const TreeShape& shape, double lambda);

struct CharPolyLog {
    int sign = 0;          // -1, 0, +1
    double log_abs = 0.0;  // -inf when sign == 0
};

CharPolyLog char_poly_log_eval(const TreeShape& shape, double lambda);

} // namespace levelwise

#endif
