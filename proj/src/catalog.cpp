#include "spectra/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "spectra/error.hpp"
#include "spectra/harmonic.hpp"

namespace spectra::catalog {

namespace {

const std::map<std::string, std::vector<Row>, std::less<>>& explicit_witnesses() {
  static const std::map<std::string, std::vector<Row>, std::less<>> table{
      {"caseA4", {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 2, 3, 4}, {0, 2, 3, 4}}},
      {"caseB2-4", {{0, 1, 3}, {0, 2, 3}, {0, 3}, {0, 3}}},
      {"blue11", {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 2, 3, 4}, {0, 1, 3, 4}}},
      {"green31", {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 3, 4}, {0, 1, 2, 4}}},
  };
  return table;
}

Row extend(Row row, std::size_t len) {
  while (row.size() < len) row.push_back(row.back() + 1);
  return row;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::UnknownMatrix, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

bool is_named(std::string_view name) {
  return name.starts_with("harmonic:") || explicit_witnesses().count(name) != 0;
}

SpectralMatrix named(std::string_view name, std::size_t len) {
  if (len == 0) throw Error(ErrorKind::InvalidBounds, "prefix length must be >= 1");
  if (auto it = explicit_witnesses().find(name); it != explicit_witnesses().end()) {
    std::vector<Row> rows;
    for (const Row& r : it->second) rows.push_back(extend(r, len));
    return SpectralMatrix::validate(std::move(rows));
  }
  if (!name.starts_with("harmonic:")) {
    throw Error(ErrorKind::UnknownMatrix, "no built-in matrix named '" + std::string(name) + "'");
  }
  std::string_view rest = name.substr(9);
  const auto slash = rest.find('/');
  const std::uint64_t n = parse_uint(rest.substr(0, slash), "row count");
  if (slash == std::string_view::npos) return harmonic::matrix(n, len);

  std::string_view del = rest.substr(slash + 1);
  if (!del.starts_with("del:")) {
    throw Error(ErrorKind::UnknownMatrix, "expected '/del:' in '" + std::string(name) + "'");
  }
  del.remove_prefix(4);
  std::set<std::uint64_t> deleted;
  while (!del.empty()) {
    const auto comma = del.find(',');
    deleted.insert(parse_uint(del.substr(0, comma), "deleted value"));
    if (comma == std::string_view::npos) break;
    del.remove_prefix(comma + 1);
  }
  return harmonic::deleted_matrix(harmonic::DeletionSpec::make(n, std::move(deleted)),
                                  std::max<std::size_t>(len, 2));
}

std::vector<std::string> names() {
  std::vector<std::string> out{"harmonic:N", "harmonic:N/del:a,b,..."};
  for (const auto& [name, rows] : explicit_witnesses()) out.push_back(name);
  return out;
}

}  // namespace spectra::catalog
