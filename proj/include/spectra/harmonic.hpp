#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra::harmonic {

// Isotropic harmonic matrix: N rows all equal to 0, 1, 2, ...
// Its spectrum is the nonnegative integers; level j has multiplicity
// C(N+j-1, N-1) and first labelling 1 + C(N+j-1, N).

/// mu_N(j) = C(N+j-1, N-1). Throws Error{Overflow}.
std::uint64_t multiplicity(std::uint64_t n, std::uint64_t j);

/// k_min(j) = 1 + C(N+j-1, N). Throws Error{Overflow}.
std::uint64_t kmin(std::uint64_t n, std::uint64_t j);

/// Largest j with kmin(n, j) <= k, found by inverting kmin monotonically.
std::uint64_t level_of(std::uint64_t n, std::uint64_t k);

/// Rows 0 .. len-1, N times.
SpectralMatrix matrix(std::uint64_t n, std::size_t len);

/// Maximal multiplicity at labelling k for two rows:
/// floor((1 + sqrt(8k - 7)) / 2), with an integer square root.
std::uint64_t m2_max(std::uint64_t k);

/// Lower-bound sequence for N = 3: on the interval I_{j,l} it equals
/// mu_3(j) + l, where I_{j,l} = [kmin(j) + c(j+1) - c(j+1-l),
/// kmin(j) + c(j+1) - c(j-l)) and c(l) = l(l+1)/2.
std::uint64_t mbar3(std::uint64_t k);

/// (j+1)(j+4)/2 for j = 1 .. j_max: values mbar3 jumps over.
std::vector<std::uint64_t> mbar3_skipped_values(std::uint64_t j_max);

/// Values of the last row are removed from 0, 1, 2, ... (delete and shift);
/// the first N-1 rows stay harmonic.
struct DeletionSpec {
  std::uint64_t n;
  std::set<std::uint64_t> deleted;

  /// Throws InvalidBounds when n < 2 or 0 is deleted.
  static DeletionSpec make(std::uint64_t n, std::set<std::uint64_t> deleted);
};

SpectralMatrix deleted_matrix(const DeletionSpec& spec, std::size_t prefix_len);

/// Last-row expansion: sum over l in {0..j} minus S of mu_{N-1}(j - l).
std::uint64_t deleted_multiplicity(const DeletionSpec& spec, std::uint64_t j);

/// 1 + sum over n < j of deleted_multiplicity(spec, n).
std::uint64_t deleted_kmin(const DeletionSpec& spec, std::uint64_t j);

/// Deletion matrix (possibly with S empty) certifying a lower bound at
/// labelling k: eigenvalue `level` has first labelling kmin <= k and
/// multiplicity `multiplicity`, and k lies inside that multiplicity group.
struct DeletionWitness {
  DeletionSpec spec;
  std::uint64_t level;
  std::uint64_t kmin;
  std::uint64_t multiplicity;
};

/// Best single-deletion (or harmonic) witness at labelling k, using
/// monotonicity in k of the maximal multiplicity. For N = 3 the witness
/// multiplicity equals mbar3(k).
DeletionWitness single_deletion_witness(std::uint64_t n, std::uint64_t k);

/// Multiplicity of single_deletion_witness(n, k): the lower-bound table
/// obtained by deleting one value in the last harmonic row.
std::uint64_t single_deletion_bound(std::uint64_t n, std::uint64_t k);

/// mu_N(j) / [ (N!)^(1-1/N) / (N-1)! * (kmin(j) - 1)^(1-1/N) ].
double asymptotic_ratio(std::uint64_t n, std::uint64_t j);

/// One block of the lower-bound table: values for k in [kmin(j), kmin(j+1)).
struct TableRow {
  std::uint64_t j;
  std::uint64_t kmin;
  std::vector<std::uint64_t> values;
};

/// mbar3 blocks for j = 0 .. j_max.
std::vector<TableRow> mbar3_table(std::uint64_t j_max);

/// single_deletion_bound blocks for j = 0 .. j_max.
std::vector<TableRow> single_deletion_table(std::uint64_t n, std::uint64_t j_max);

}  // namespace spectra::harmonic
