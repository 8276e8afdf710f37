#include "levelwise/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace levelwise {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::vector<std::pair<double, std::int64_t>> output_pairs(const SpectrumReport& report,
                                                          bool laplacian) {
    if (!laplacian) return report.pairs;
    std::vector<std::pair<double, std::int64_t>> pairs = report.pairs;
    for (auto& [value, mult] : pairs) value = 1.0 - value;
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return pairs;
}

} // namespace

nlohmann::ordered_json build_document(const TreeShape& shape, const SpectrumReport& report,
                                      const std::optional<VerifySummary>& verify, bool laplacian) {
    const LayerProfile prof = layer_profile(shape);

    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["shape"] = {{"degrees", shape.degrees()}, {"roots", shape.roots()}, {"height", shape.height()}};
    doc["layers"] = prof.sizes;
    doc["order"] = prof.order;
    doc["psi"] = prof.psi;

    nlohmann::ordered_json subs = nlohmann::ordered_json::array();
    for (const SubmatrixRecord& rec : report.submatrices) {
        nlohmann::ordered_json s;
        s["j"] = rec.j;
        s["kind"] = submatrix_kind_name(rec.kind);
        s["size"] = rec.size;
        s["eigenvalues"] = rec.eigenvalues;
        s["block_multiplicity"] = rec.block_multiplicity;
        subs.push_back(std::move(s));
    }
    doc["submatrices"] = std::move(subs);

    nlohmann::ordered_json spectrum = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : report.pairs)
        spectrum.push_back({{"value", value}, {"multiplicity", mult}});
    doc["spectrum"] = std::move(spectrum);

    doc["randic_index_half"] = report.randic_index_half;
    doc["randic_index_minus_one"] = report.randic_index_minus_one;
    doc["randic_energy"] = report.randic_energy;

    if (laplacian) {
        nlohmann::ordered_json lap = nlohmann::ordered_json::array();
        for (const auto& [value, mult] : output_pairs(report, true))
            lap.push_back({{"value", value}, {"multiplicity", mult}});
        doc["laplacian_spectrum"] = std::move(lap);
    }
    if (verify) doc["verified"] = {{"oracle_max_abs_diff", verify->eigen_max_abs_diff}};
    return doc;
}

std::string render_table(const SpectrumReport& report, bool laplacian) {
    std::string out;
    for (const auto& [value, mult] : output_pairs(report, laplacian))
        out += format_real(value) + ":" + std::to_string(mult) + "\n";
    return out;
}

std::string render_csv(const SpectrumReport& report, bool laplacian) {
    std::string out = "value,multiplicity\n";
    for (const auto& [value, mult] : output_pairs(report, laplacian))
        out += format_real(value) + "," + std::to_string(mult) + "\n";
    return out;
}

std::string render_verify(const VerifySummary& v) {
    auto line = [](const std::string& label, const std::string& detail, bool pass) {
        return label + ": " + detail + (pass ? "  [pass]" : "  [FAIL]") + "\n";
    };
    std::string out;
    out += "order: " + std::to_string(v.order) + "\n";
    out += line("assembly max |diff|", format_real(v.assembly_max_abs_diff), v.assembly_ok);
    out += line("eigenvalue max |diff|",
                format_real(v.eigen_max_abs_diff) + " (tol " + format_real(kVerifyEigenTol) + ")",
                v.eigen_ok);
    out += line("zero multiplicity",
                "closed=" + std::to_string(v.zero_mult_closed) +
                    " merged=" + std::to_string(v.zero_mult_merged) +
                    " oracle=" + std::to_string(v.zero_mult_oracle),
                v.zero_ok);
    out += line("trace identities",
                "|sum l|=" + format_real(v.trace_abs) +
                    " |sum l^2 - 2 R(-1)|=" + format_real(v.trace_sq_abs_err),
                v.trace_ok);
    out += std::string("overall: ") + (v.ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace levelwise
