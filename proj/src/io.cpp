#include "spectra/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Value parse_value(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Value v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": '" + std::string(token) + "' is not an integer");
  }
  return v;
}

SpectralMatrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"rows\" array");
  }
  std::vector<Row> rows;
  for (const auto& r : doc["rows"]) {
    if (!r.is_array()) throw Error(ErrorKind::ParseError, "every row must be an array");
    Row row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "entries must be integers");
      row.push_back(v.get<Value>());
    }
    rows.push_back(std::move(row));
  }
  return SpectralMatrix::validate(std::move(rows));
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(name) + "'");
}

SpectralMatrix parse_matrix(std::string_view text) {
  if (trim(text).starts_with('{')) return parse_json(text);
  std::vector<Row> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    Row row;
    while (true) {
      const auto comma = line.find(',');
      row.push_back(parse_value(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "no rows found");
  return SpectralMatrix::validate(std::move(rows));
}

SpectralMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string matrix_to_text(const SpectralMatrix& a) {
  std::string out;
  for (const Row& r : a.rows()) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(r[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const SpectralMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : a.rows()) rows.push_back(r);
  return {{"rows", rows}};
}

nlohmann::json spectrum_to_json(const SpectrumPrefix& prefix) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Eigenvalue& e : prefix.entries) {
    entries.push_back({{"lambda", e.value}, {"m", e.multiplicity}});
  }
  return {{"entries", entries}, {"covered_rank", prefix.covered_rank}};
}

nlohmann::json report_to_json(const search::SearchReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const SpectralMatrix& w : report.witnesses) witnesses.push_back(matrix_to_json(w)["rows"]);
  return {
      {"N", report.bounds.n},
      {"k", report.bounds.k},
      {"bounds", {{"B", report.bounds.max_entry}, {"L", report.bounds.max_row_len}}},
      {"best", report.best},
      {"status", search::to_string(report.status)},
      {"witnesses", witnesses},
      {"examined", report.examined},
      {"pruned", report.pruned},
      {"wall_ms", report.wall.count()},
  };
}

std::string format_table_row(const harmonic::TableRow& row) {
  std::string out = std::to_string(row.j) + " | " + std::to_string(row.kmin) + " |";
  for (std::uint64_t v : row.values) out += ' ' + std::to_string(v);
  return out;
}

std::string emit_table(std::span<const harmonic::TableRow> rows, Format format) {
  switch (format) {
    case Format::Text: {
      std::string out;
      for (const auto& row : rows) out += format_table_row(row) + '\n';
      return out;
    }
    case Format::Csv: {
      std::string out = "j,k,value\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          out += std::to_string(row.j) + ',' + std::to_string(row.kmin + i) + ',' +
                 std::to_string(row.values[i]) + '\n';
        }
      }
      return out;
    }
    case Format::Json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          out.push_back({{"j", row.j}, {"k", row.kmin + i}, {"value", row.values[i]}});
        }
      }
      return out.dump() + '\n';
    }
  }
  return {};
}

std::vector<harmonic::TableRow> group_by_level(std::uint64_t n,
                                               std::span<const search::SearchReport> reports) {
  std::vector<harmonic::TableRow> out;
  for (const auto& report : reports) {
    const std::uint64_t k = report.bounds.k;
    const std::uint64_t j = harmonic::level_of(n, k);
    if (out.empty() || out.back().j != j) out.push_back({j, harmonic::kmin(n, j), {}});
    out.back().values.push_back(report.best);
  }
  return out;
}

}  // namespace spectra::io
