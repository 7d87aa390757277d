#pragma once

#include <cstdint>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

struct Eigenvalue {
  Value value;
  std::uint64_t multiplicity;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// The lowest eigenvalues in increasing order with their full multiplicities.
/// The last group is never split, so covered_rank may exceed the request.
struct SpectrumPrefix {
  std::vector<Eigenvalue> entries;
  std::uint64_t covered_rank = 0;

  friend bool operator==(const SpectrumPrefix&, const SpectrumPrefix&) = default;
};

/// Labelling k >= 1, counted with multiplicity.
class RankQuery {
 public:
  explicit RankQuery(std::uint64_t k);
  std::uint64_t k() const noexcept { return k_; }

 private:
  std::uint64_t k_;
};

/// Rows shorter than the requested rank are either rejected or taken as
/// complete (no entries beyond the last one).
enum class Truncation { Reject, Acknowledge };

/// Best-first enumeration of N-fold sums until at least `count` eigenvalues
/// (with multiplicity) are covered. Never materializes the full product.
/// If the rows are acknowledged finite and hold fewer than `count` tuples,
/// the whole spectrum is returned.
SpectrumPrefix enumerate_spectrum(const SpectralMatrix& a, std::uint64_t count,
                                  Truncation truncation = Truncation::Reject);

/// Number of index tuples whose entries sum to `lambda` (meet in the middle).
std::uint64_t count_representations(const SpectralMatrix& a, Value lambda);

struct LabelledEigenvalue {
  Value lambda;
  std::uint64_t multiplicity;

  friend bool operator==(const LabelledEigenvalue&, const LabelledEigenvalue&) = default;
};

/// lambda_k and its full multiplicity m(lambda_k), even when k is not the
/// first labelling of that value. Throws RankOutOfRange when the finite
/// spectrum has fewer than k elements.
LabelledEigenvalue multiplicity_at(const SpectralMatrix& a, RankQuery k,
                                   Truncation truncation = Truncation::Reject);

/// m(k, A) <= k^(N-1).
bool check_rank_bound(const SpectralMatrix& a, RankQuery k,
                      Truncation truncation = Truncation::Reject);

/// m(k, A) for k = 1 .. covered rank of enumerate_spectrum(a, count).
std::vector<std::uint64_t> multiplicity_sequence(const SpectralMatrix& a, std::uint64_t count,
                                                 Truncation truncation = Truncation::Reject);

/// Counts of sums relative to the ground value: result[v] is the number of
/// tuples with sum ground_value() + v, for v in [0, span]. Exact on that
/// window; uses the vectorized histogram kernels.
std::vector<std::uint64_t> spectrum_histogram(const SpectralMatrix& a, std::uint64_t span);

/// Same contract as multiplicity_at, computed from spectrum_histogram on the
/// window [ground, ground + min_n (a^n_k - a^n_1)].
LabelledEigenvalue multiplicity_at_histogram(const SpectralMatrix& a, RankQuery k,
                                             Truncation truncation = Truncation::Reject);

}  // namespace spectra
