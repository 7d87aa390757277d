#include "spectra/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::uint64_t magnitude(Value v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

SpectralMatrix SpectralMatrix::validate(std::vector<Row> rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyRow, "matrix has no rows");
  std::uint64_t max_magnitude = 0;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const Row& row = rows[n];
    if (row.empty()) throw Error(ErrorKind::EmptyRow, "row " + std::to_string(n) + " is empty");
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (!(row[i] < row[i + 1])) {
        throw Error(ErrorKind::NonIncreasingRow,
                    "row " + std::to_string(n) + " at index " + std::to_string(i) + ": " +
                        std::to_string(row[i]) + " >= " + std::to_string(row[i + 1]));
      }
    }
    max_magnitude = std::max({max_magnitude, magnitude(row.front()), magnitude(row.back())});
  }
  // Differences of entries are formed too (normalization, shifted sums), so
  // the audit is against 2 * N * max|entry|.
  unsigned __int128 worst = static_cast<unsigned __int128>(max_magnitude) * rows.size() * 2;
  if (worst > static_cast<unsigned __int128>(std::numeric_limits<Value>::max())) {
    throw Error(ErrorKind::OverflowRisk, "N-fold sums of entries may exceed 64 bits");
  }
  return SpectralMatrix(std::move(rows));
}

std::size_t SpectralMatrix::shortest_row() const noexcept {
  std::size_t len = std::numeric_limits<std::size_t>::max();
  for (const Row& r : rows_) len = std::min(len, r.size());
  return len;
}

std::size_t SpectralMatrix::longest_row() const noexcept {
  std::size_t len = 0;
  for (const Row& r : rows_) len = std::max(len, r.size());
  return len;
}

Value SpectralMatrix::ground_value() const noexcept {
  Value total = 0;
  for (const Row& r : rows_) total += r.front();
  return total;
}

SpectralMatrix SpectralMatrix::truncated(std::size_t len) const {
  std::vector<Row> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.emplace_back(r.begin(), r.begin() + std::min(len, r.size()));
  return validate(std::move(out));
}

SpectralMatrix SpectralMatrix::scaled(Value factor) const {
  if (factor <= 0) throw Error(ErrorKind::InvalidBounds, "scale factor must be positive");
  std::vector<Row> out = rows_;
  for (Row& r : out) {
    for (Value& v : r) {
      if (__builtin_mul_overflow(v, factor, &v)) {
        throw Error(ErrorKind::OverflowRisk, "scaled entry exceeds 64 bits");
      }
    }
  }
  return validate(std::move(out));
}

SpectralMatrix normalize(const SpectralMatrix& a) {
  std::vector<Row> rows(a.rows().begin(), a.rows().end());
  std::uint64_t g = 0;
  for (Row& r : rows) {
    const Value base = r.front();
    for (Value& v : r) {
      v -= base;
      g = std::gcd(g, static_cast<std::uint64_t>(v));
    }
  }
  if (g > 1) {
    for (Row& r : rows) {
      for (Value& v : r) v /= static_cast<Value>(g);
    }
  }
  std::sort(rows.begin(), rows.end());
  return SpectralMatrix::validate(std::move(rows));
}

bool is_canonical(const SpectralMatrix& a) { return normalize(a) == a; }

bool flattened_less(const SpectralMatrix& a, const SpectralMatrix& b) {
  Row fa, fb;
  std::vector<std::size_t> la, lb;
  for (const Row& r : a.rows()) {
    fa.insert(fa.end(), r.begin(), r.end());
    la.push_back(r.size());
  }
  for (const Row& r : b.rows()) {
    fb.insert(fb.end(), r.begin(), r.end());
    lb.push_back(r.size());
  }
  if (fa != fb) return fa < fb;
  return la < lb;
}

}  // namespace spectra
