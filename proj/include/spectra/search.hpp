#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/spectrum.hpp"

namespace spectra::search {

/// Family searched: canonical integer matrices with N rows, entries in
/// [0, max_entry], row lengths in [1, max_row_len]. A row shorter than
/// max_row_len stands for a row whose remaining entries exceed N * max_entry,
/// so they never reach lambda_k and finite rows give exact multiplicities.
struct SearchBounds {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t max_entry;
  std::uint64_t max_row_len;

  /// Throws InvalidBounds unless n >= 1, k >= 1, max_entry >= 1 and
  /// 1 <= max_row_len <= k (max_row_len >= 2 whenever k >= 2).
  static SearchBounds make(std::uint64_t n, std::uint64_t k, std::uint64_t max_entry,
                           std::uint64_t max_row_len);

  /// max_entry = max(1, k - 1), max_row_len = k.
  static SearchBounds defaults(std::uint64_t n, std::uint64_t k);
};

enum class ResultStatus { LowerBound, Saturated };

const char* to_string(ResultStatus status) noexcept;

struct SearchOptions {
  unsigned threads = 1;
  /// Refuse with EstimateTooLarge when estimate_space exceeds this.
  std::uint64_t budget = 200'000'000;
  /// Re-run with max_entry + 1 and report Saturated if the maximum holds.
  bool check_saturation = true;
  std::size_t witness_cap = 16;
  /// Branches whose multiplicity bound is below this may be skipped.
  std::uint64_t prune_below = 0;
  /// Called from the coordinating thread roughly every 250 ms.
  std::function<void(std::uint64_t examined, std::uint64_t estimate)> progress;
};

struct SearchReport {
  SearchBounds bounds{};
  std::uint64_t best = 0;
  /// Canonical maximizers, ascending by flattened rows, at most witness_cap.
  std::vector<SpectralMatrix> witnesses;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t estimate = 0;
  std::chrono::milliseconds wall{0};
  ResultStatus status = ResultStatus::LowerBound;
};

/// Number of candidate rows: strictly increasing, starting at 0, entries
/// <= max_entry, length <= max_row_len.
std::uint64_t row_family_size(const SearchBounds& bounds);

/// Multisets of N candidate rows; an upper bound on the canonical matrices
/// examined. Saturates at UINT64_MAX.
std::uint64_t estimate_space(const SearchBounds& bounds);

/// All candidate rows in ascending lexicographic order.
std::vector<Row> row_family(const SearchBounds& bounds);

/// Maximum of m(k, A) over the family. Best value and witness list are
/// identical for every thread count; examined/pruned counts may vary
/// because the shared pruning bound is propagated asynchronously.
SearchReport search_max(const SearchBounds& bounds, const SearchOptions& options = {});

struct BoundsPolicy {
  std::optional<std::uint64_t> max_entry;    // default k - 1
  std::optional<std::uint64_t> max_row_len;  // default k
};

SearchBounds bounds_for(std::uint64_t n, std::uint64_t k, const BoundsPolicy& policy);

/// search_max for k = 1 .. k_max.
std::vector<SearchReport> search_table(std::uint64_t n, std::uint64_t k_max,
                                       const BoundsPolicy& policy,
                                       const SearchOptions& options = {});

/// Recomputes m(k, A) and compares with the claim.
bool verify_witness(const SpectralMatrix& a, std::uint64_t k, std::uint64_t claimed,
                    Truncation truncation = Truncation::Reject);

}  // namespace spectra::search
