#include "spectra/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

#include "spectra/error.hpp"
#include "spectra/integer_math.hpp"
#include "spectra/kernels.hpp"

namespace spectra {

namespace {

void require_rows_cover(const SpectralMatrix& a, std::uint64_t count, Truncation truncation) {
  if (truncation == Truncation::Acknowledge) return;
  if (a.shortest_row() < count) {
    throw Error(ErrorKind::TruncatedRows,
                "a row has " + std::to_string(a.shortest_row()) + " entries but rank " +
                    std::to_string(count) + " was requested; first-k correctness needs rows of "
                    "length >= k or an explicit acknowledgment that rows are complete");
  }
}

// Frontier node of the best-first walk. Every nonzero index tuple has a
// unique parent (decrement its last nonzero coordinate), so successors of a
// node only bump coordinates at or after `last_bumped` and no visited set is
// needed.
struct Frontier {
  Value sum;
  std::uint32_t node;
  bool operator>(const Frontier& o) const { return sum > o.sum; }
};

// Enumerates all tuples with sum <= limit, calling visit(sum).
void enumerate_sums(const SpectralMatrix& a, std::size_t first, std::size_t last, Value limit,
                    const std::function<void(Value)>& visit) {
  Value tail_floor = 0;
  std::vector<Value> floor_after(last - first + 1, 0);
  for (std::size_t n = last; n-- > first;) {
    tail_floor += a.row(n).front();
    floor_after[n - first] = tail_floor;
  }
  std::function<void(std::size_t, Value)> rec = [&](std::size_t n, Value partial) {
    if (n == last) {
      visit(partial);
      return;
    }
    const Value rest = n + 1 < last ? floor_after[n + 1 - first] : 0;
    for (Value v : a.row(n)) {
      if (partial + v + rest > limit) break;
      rec(n + 1, partial + v);
    }
  };
  rec(first, 0);
}

}  // namespace

RankQuery::RankQuery(std::uint64_t k) : k_(k) {
  if (k == 0) throw Error(ErrorKind::InvalidBounds, "labelling k must be >= 1");
}

SpectrumPrefix enumerate_spectrum(const SpectralMatrix& a, std::uint64_t count,
                                  Truncation truncation) {
  if (count == 0) throw Error(ErrorKind::InvalidBounds, "requested rank must be >= 1");
  require_rows_cover(a, count, truncation);

  const std::size_t n_rows = a.num_rows();
  std::vector<std::uint32_t> indices;  // n_rows entries per node
  std::vector<std::uint32_t> last_bumped;
  std::priority_queue<Frontier, std::vector<Frontier>, std::greater<>> heap;

  indices.assign(n_rows, 0);
  last_bumped.push_back(0);
  heap.push({a.ground_value(), 0});

  SpectrumPrefix out;
  while (!heap.empty()) {
    const Frontier top = heap.top();
    if (out.covered_rank >= count && top.sum != out.entries.back().value) break;
    heap.pop();

    if (!out.entries.empty() && out.entries.back().value == top.sum) {
      ++out.entries.back().multiplicity;
    } else {
      out.entries.push_back({top.sum, 1});
    }
    ++out.covered_rank;

    const std::size_t base = static_cast<std::size_t>(top.node) * n_rows;
    for (std::size_t n = last_bumped[top.node]; n < n_rows; ++n) {
      const std::uint32_t idx = indices[base + n];
      const Row& row = a.row(n);
      if (idx + 1 >= row.size()) continue;
      const auto child = static_cast<std::uint32_t>(last_bumped.size());
      for (std::size_t m = 0; m < n_rows; ++m) indices.push_back(indices[base + m]);
      indices[static_cast<std::size_t>(child) * n_rows + n] = idx + 1;
      last_bumped.push_back(static_cast<std::uint32_t>(n));
      heap.push({top.sum - row[idx] + row[idx + 1], child});
    }
  }
  return out;
}

std::uint64_t count_representations(const SpectralMatrix& a, Value lambda) {
  const std::size_t n_rows = a.num_rows();
  const std::size_t split = n_rows / 2;
  Value right_floor = 0;
  for (std::size_t n = split; n < n_rows; ++n) right_floor += a.row(n).front();
  Value left_floor = 0;
  for (std::size_t n = 0; n < split; ++n) left_floor += a.row(n).front();
  if (lambda < left_floor + right_floor) return 0;

  std::unordered_map<Value, std::uint64_t> left;
  enumerate_sums(a, 0, split, lambda - right_floor, [&](Value s) { ++left[s]; });

  std::uint64_t total = 0;
  enumerate_sums(a, split, n_rows, lambda - left_floor, [&](Value s) {
    auto it = left.find(lambda - s);
    if (it != left.end()) total += it->second;
  });
  return total;
}

LabelledEigenvalue multiplicity_at(const SpectralMatrix& a, RankQuery k, Truncation truncation) {
  const SpectrumPrefix prefix = enumerate_spectrum(a, k.k(), truncation);
  if (prefix.covered_rank < k.k()) {
    throw Error(ErrorKind::RankOutOfRange, "spectrum has only " +
                                               std::to_string(prefix.covered_rank) +
                                               " elements, labelling " + std::to_string(k.k()) +
                                               " requested");
  }
  return {prefix.entries.back().value, prefix.entries.back().multiplicity};
}

bool check_rank_bound(const SpectralMatrix& a, RankQuery k, Truncation truncation) {
  const auto m = multiplicity_at(a, k, truncation).multiplicity;
  return m <= saturating_pow(k.k(), a.num_rows() - 1);
}

std::vector<std::uint64_t> multiplicity_sequence(const SpectralMatrix& a, std::uint64_t count,
                                                 Truncation truncation) {
  const SpectrumPrefix prefix = enumerate_spectrum(a, count, truncation);
  std::vector<std::uint64_t> seq;
  seq.reserve(prefix.covered_rank);
  for (const Eigenvalue& e : prefix.entries) seq.insert(seq.end(), e.multiplicity, e.multiplicity);
  return seq;
}

std::vector<std::uint64_t> spectrum_histogram(const SpectralMatrix& a, std::uint64_t span) {
  constexpr std::uint64_t kMaxSpan = std::uint64_t{1} << 26;
  if (span >= kMaxSpan) {
    throw Error(ErrorKind::InvalidBounds, "histogram window of " + std::to_string(span) +
                                              " values is too wide");
  }
  std::uint64_t tuples = 1;
  for (const Row& r : a.rows()) {
    auto next = checked_mul(tuples, r.size());
    if (!next) throw Error(ErrorKind::Overflow, "tuple count exceeds 64 bits");
    tuples = *next;
  }

  const std::size_t width = static_cast<std::size_t>(span) + 1;
  std::vector<kernels::Count> hist(width, 0), next(width, 0);
  hist[0] = 1;
  std::vector<std::uint64_t> offsets;
  for (const Row& r : a.rows()) {
    offsets.clear();
    for (Value v : r) {
      const auto rel = static_cast<std::uint64_t>(v - r.front());
      if (rel > span) break;
      offsets.push_back(rel);
    }
    kernels::convolve_indicator(hist, offsets, next);
    hist.swap(next);
  }
  return hist;
}

LabelledEigenvalue multiplicity_at_histogram(const SpectralMatrix& a, RankQuery k,
                                             Truncation truncation) {
  require_rows_cover(a, k.k(), truncation);
  std::uint64_t span = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t full_span = 0;
  for (const Row& r : a.rows()) {
    full_span += static_cast<std::uint64_t>(r.back() - r.front());
    if (r.size() >= k.k()) {
      span = std::min(span, static_cast<std::uint64_t>(r[k.k() - 1] - r.front()));
    }
  }
  span = std::min(span, full_span);
  const auto hist = spectrum_histogram(a, span);
  const std::size_t pos = kernels::rank_position(hist, k.k());
  if (pos == hist.size()) {
    throw Error(ErrorKind::RankOutOfRange,
                "spectrum has fewer than " + std::to_string(k.k()) + " elements");
  }
  return {a.ground_value() + static_cast<Value>(pos), hist[pos]};
}

}  // namespace spectra
