#include "spectra/harmonic.hpp"

#include <cmath>
#include <string>

#include "spectra/error.hpp"
#include "spectra/integer_math.hpp"

namespace spectra::harmonic {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidBounds, "number of rows must be >= 1");
}

// c(l) = l(l+1)/2
std::uint64_t triangular(std::uint64_t l) { return l * (l + 1) / 2; }

// kmin(n, j) <= k, with overflow meaning "no".
bool kmin_at_most(std::uint64_t n, std::uint64_t j, std::uint64_t k) {
  if (j == 0) return true;
  auto c = checked_binomial(n + j - 1, n);
  return c && *c < k;
}

}  // namespace

std::uint64_t multiplicity(std::uint64_t n, std::uint64_t j) {
  require_positive(n);
  return binomial(n + j - 1, n - 1);
}

std::uint64_t kmin(std::uint64_t n, std::uint64_t j) {
  require_positive(n);
  if (j == 0) return 1;
  const std::uint64_t below = binomial(n + j - 1, n);
  auto k = checked_add(below, 1);
  if (!k) throw Error(ErrorKind::Overflow, "kmin exceeds 64 bits");
  return *k;
}

std::uint64_t level_of(std::uint64_t n, std::uint64_t k) {
  require_positive(n);
  if (k == 0) throw Error(ErrorKind::InvalidBounds, "labelling k must be >= 1");
  std::uint64_t lo = 0;  // kmin(lo) <= k
  std::uint64_t hi = 1;  // kmin(hi) > k once found
  while (kmin_at_most(n, hi, k)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (kmin_at_most(n, mid, k)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

SpectralMatrix matrix(std::uint64_t n, std::size_t len) {
  require_positive(n);
  if (len == 0) throw Error(ErrorKind::EmptyRow, "harmonic prefix length must be >= 1");
  Row row(len);
  for (std::size_t i = 0; i < len; ++i) row[i] = static_cast<Value>(i);
  return SpectralMatrix::validate(std::vector<Row>(n, row));
}

std::uint64_t m2_max(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidBounds, "labelling k must be >= 1");
  // floor((1 + sqrt(x)) / 2) == floor((1 + isqrt(x)) / 2) since 2m - 1 is
  // an integer.
  return (1 + isqrt(8 * k - 7)) / 2;
}

std::uint64_t mbar3(std::uint64_t k) {
  const std::uint64_t j = level_of(3, k);
  const std::uint64_t base = kmin(3, j);
  for (std::uint64_t l = 0; l <= j; ++l) {
    const std::uint64_t lo = base + triangular(j + 1) - triangular(j + 1 - l);
    const std::uint64_t hi = base + triangular(j + 1) - triangular(j - l);
    if (lo <= k && k < hi) return multiplicity(3, j) + l;
  }
  throw Error(ErrorKind::InvalidBounds, "no interval contains k = " + std::to_string(k));
}

std::vector<std::uint64_t> mbar3_skipped_values(std::uint64_t j_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 1; j <= j_max; ++j) out.push_back((j + 1) * (j + 4) / 2);
  return out;
}

DeletionSpec DeletionSpec::make(std::uint64_t n, std::set<std::uint64_t> deleted) {
  if (n < 2) throw Error(ErrorKind::InvalidBounds, "deletion needs at least 2 rows");
  if (deleted.count(0) != 0) throw Error(ErrorKind::InvalidBounds, "cannot delete the value 0");
  return DeletionSpec{n, std::move(deleted)};
}

SpectralMatrix deleted_matrix(const DeletionSpec& spec, std::size_t prefix_len) {
  if (prefix_len < 2) throw Error(ErrorKind::InvalidBounds, "prefix length must be >= 2");
  Row plain(prefix_len);
  for (std::size_t i = 0; i < prefix_len; ++i) plain[i] = static_cast<Value>(i);
  Row last;
  for (std::uint64_t v = 0; last.size() < prefix_len; ++v) {
    if (spec.deleted.count(v) == 0) last.push_back(static_cast<Value>(v));
  }
  std::vector<Row> rows(spec.n - 1, plain);
  rows.push_back(std::move(last));
  return SpectralMatrix::validate(std::move(rows));
}

std::uint64_t deleted_multiplicity(const DeletionSpec& spec, std::uint64_t j) {
  std::uint64_t total = 0;
  for (std::uint64_t l = 0; l <= j; ++l) {
    if (spec.deleted.count(l) != 0) continue;
    total += multiplicity(spec.n - 1, j - l);
  }
  return total;
}

std::uint64_t deleted_kmin(const DeletionSpec& spec, std::uint64_t j) {
  std::uint64_t k = 1;
  for (std::uint64_t level = 0; level < j; ++level) k += deleted_multiplicity(spec, level);
  return k;
}

DeletionWitness single_deletion_witness(std::uint64_t n, std::uint64_t k) {
  require_positive(n);
  const std::uint64_t j = level_of(n, k);
  if (n == 1) return {DeletionSpec{1, {}}, j, kmin(1, j), 1};

  DeletionWitness best{DeletionSpec::make(n, {}), j, kmin(n, j), multiplicity(n, j)};
  // Deleting d from the last row lowers the first labelling of level j+1 by
  // kmin_{N-1}(j+1-d) - 1 and its multiplicity by mu_{N-1}(j+1-d).
  for (std::uint64_t d = 1; d <= j; ++d) {
    DeletionSpec spec = DeletionSpec::make(n, {d});
    const std::uint64_t first = deleted_kmin(spec, j + 1);
    const std::uint64_t mult = deleted_multiplicity(spec, j + 1);
    if (first <= k && k < first + mult && mult > best.multiplicity) {
      best = {std::move(spec), j + 1, first, mult};
    }
  }
  return best;
}

std::uint64_t single_deletion_bound(std::uint64_t n, std::uint64_t k) {
  return single_deletion_witness(n, k).multiplicity;
}

double asymptotic_ratio(std::uint64_t n, std::uint64_t j) {
  require_positive(n);
  if (j == 0) throw Error(ErrorKind::InvalidBounds, "asymptotic ratio needs j >= 1");
  const double dn = static_cast<double>(n);
  const double dj = static_cast<double>(j);
  const double exponent = 1.0 - 1.0 / dn;
  const double log_mu = std::lgamma(dn + dj) - std::lgamma(dn) - std::lgamma(dj + 1.0);
  const double log_below = std::lgamma(dn + dj) - std::lgamma(dn + 1.0) - std::lgamma(dj);
  const double log_model =
      exponent * std::lgamma(dn + 1.0) - std::lgamma(dn) + exponent * log_below;
  return std::exp(log_mu - log_model);
}

std::vector<TableRow> mbar3_table(std::uint64_t j_max) {
  std::vector<TableRow> out;
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    TableRow row{j, kmin(3, j), {}};
    for (std::uint64_t k = row.kmin; k < kmin(3, j + 1); ++k) row.values.push_back(mbar3(k));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableRow> single_deletion_table(std::uint64_t n, std::uint64_t j_max) {
  std::vector<TableRow> out;
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    TableRow row{j, kmin(n, j), {}};
    for (std::uint64_t k = row.kmin; k < kmin(n, j + 1); ++k) {
      row.values.push_back(single_deletion_bound(n, k));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace spectra::harmonic
