#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spectra/harmonic.hpp"
#include "spectra/matrix.hpp"
#include "spectra/search.hpp"
#include "spectra/spectrum.hpp"

namespace spectra::io {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);

/// Text form: one row per line, comma-separated integers, '#' starts a
/// comment, blank lines ignored. A document whose first non-blank character
/// is '{' is read as JSON {"rows": [[...], ...]}. Throws Error{ParseError}
/// or the validation errors of SpectralMatrix.
SpectralMatrix parse_matrix(std::string_view text);

SpectralMatrix load_matrix(const std::string& path);

std::string matrix_to_text(const SpectralMatrix& a);
nlohmann::json matrix_to_json(const SpectralMatrix& a);

nlohmann::json spectrum_to_json(const SpectrumPrefix& prefix);

/// {"N", "k", "bounds": {"B", "L"}, "best", "status", "witnesses",
///  "examined", "pruned", "wall_ms"}
nlohmann::json report_to_json(const search::SearchReport& report);

/// "j | kmin | v v v"
std::string format_table_row(const harmonic::TableRow& row);

/// Text: one block per line. CSV: header "j,k,value" then one line per k.
/// JSON: array of {"j", "k", "value"}.
std::string emit_table(std::span<const harmonic::TableRow> rows, Format format);

/// Groups per-k search maxima (reports[i] has k = i + 1) into the harmonic
/// level blocks of N rows. The last block may be partial.
std::vector<harmonic::TableRow> group_by_level(std::uint64_t n,
                                               std::span<const search::SearchReport> reports);

}  // namespace spectra::io
