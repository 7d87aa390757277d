#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spectra {

using Value = std::int64_t;
using Row = std::vector<Value>;

/// N finite, strictly increasing integer rows. The spectrum is the multiset
/// of all sums taking exactly one entry from each row.
///
/// Construction audits that N * max|entry| fits in 64 bits, so every N-fold
/// sum computed downstream is overflow free.
class SpectralMatrix {
 public:
  /// Throws Error{EmptyRow | NonIncreasingRow | OverflowRisk}.
  static SpectralMatrix validate(std::vector<Row> rows);

  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::span<const Row> rows() const noexcept { return rows_; }
  const Row& row(std::size_t n) const { return rows_.at(n); }

  std::size_t shortest_row() const noexcept;
  std::size_t longest_row() const noexcept;

  /// Sum of the row minima, i.e. the bottom of the spectrum.
  Value ground_value() const noexcept;

  /// Copy with every row cut to at most `len` entries.
  SpectralMatrix truncated(std::size_t len) const;

  /// Copy with every entry multiplied by `factor` (> 0).
  SpectralMatrix scaled(Value factor) const;

  friend bool operator==(const SpectralMatrix&, const SpectralMatrix&) = default;

 private:
  explicit SpectralMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {}

  std::vector<Row> rows_;
};

/// Canonical representative under shift, row permutation and positive
/// scaling: zero first column, lexicographically ascending rows, gcd of the
/// nonzero entries equal to 1.
SpectralMatrix normalize(const SpectralMatrix& a);

bool is_canonical(const SpectralMatrix& a);

/// Lexicographic order on the concatenated rows, ties broken by row lengths.
bool flattened_less(const SpectralMatrix& a, const SpectralMatrix& b);

}  // namespace spectra
