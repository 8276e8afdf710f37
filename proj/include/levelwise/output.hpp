#ifndef LEVELWISE_OUTPUT_HPP
#define LEVELWISE_OUTPUT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "levelwise/spectrum.hpp"
#include "levelwise/tree.hpp"
#include "levelwise/verify.hpp"

namespace levelwise {

enum class OutputFormat { table, csv, json };

inline constexpr const char* kSchemaVersion = "1.0";

/// Machine-readable result document, mirroring schemas/spectrum_output.schema.json.
/// Key order is fixed, so identical inputs serialize byte-identically.
nlohmann::ordered_json build_document(const TreeShape& shape, const SpectrumReport& report,
                                      const std::optional<VerifySummary>& verify = std::nullopt,
                                      bool laplacian = false);

/// Spectrum pairs, one "value:multiplicity" line per distinct eigenvalue,
/// descending. With laplacian set the values are 1 - rho.
std::string render_table(const SpectrumReport& report, bool laplacian = false);

/// "value,multiplicity" header plus one row per pair, 17 significant digits.
std::string render_csv(const SpectrumReport& report, bool laplacian = false);

/// Human-readable verification report for the verify subcommand.
std::string render_verify(const VerifySummary& v);

std::string format_real(double value);

} // namespace levelwise

#endif
