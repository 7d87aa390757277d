#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "spectra/error.hpp"
#include "spectra/harmonic.hpp"
#include "spectra/spectrum.hpp"

using namespace spectra;
using namespace spectra::harmonic;

TEST_CASE("harmonic closed forms") {
  CHECK(multiplicity(3, 4) == 15);
  CHECK(multiplicity(4, 2) == 10);
  CHECK(multiplicity(1, 9) == 1);
  CHECK(kmin(3, 0) == 1);
  CHECK(kmin(3, 3) == 11);
  CHECK(kmin(4, 3) == 16);
  CHECK(level_of(3, 11) == 3);
  CHECK(level_of(3, 10) == 2);
  CHECK(level_of(3, 1) == 0);
  CHECK(level_of(1, 40) == 39);
  CHECK_THROWS_AS(multiplicity(40, 1'000'000), Error);
}

TEST_CASE("harmonic matrix agrees with the closed forms") {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const std::uint64_t kmax = 60;
    const auto seq = multiplicity_sequence(matrix(n, kmax), kmax);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      CHECK(seq[k - 1] == multiplicity(n, level_of(n, k)));
    }
    for (std::uint64_t j = 0; kmin(n, j) <= kmax; ++j) {
      const auto hit = multiplicity_at(matrix(n, kmax), RankQuery(kmin(n, j)));
      CHECK(hit == LabelledEigenvalue{static_cast<Value>(j), multiplicity(n, j)});
    }
  }
}

TEST_CASE("level_of inverts kmin") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t j = 0; j < 40; ++j) {
      const auto first = kmin(n, j);
      CHECK(level_of(n, first) == j);
      if (first > 1) CHECK(level_of(n, first - 1) == j - 1);
    }
  }
}

TEST_CASE("two-row maximum") {
  CHECK(m2_max(1) == 1);
  CHECK(m2_max(3) == 2);
  CHECK(m2_max(4) == 3);
  CHECK(m2_max(7) == 4);
  for (std::uint64_t k = 1; k < 5000; ++k) CHECK(m2_max(k) <= m2_max(k + 1));
  CHECK(m2_max(1'000'000'000'000ull) == (1 + 2'828'427) / 2);

  // No random pair of rows beats it.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Rows rows{oracle::random_row(rng, 7, 0, 10), oracle::random_row(rng, 7, 0, 10)};
    const auto m = oracle::multiplicities(rows);
    for (std::uint64_t k = 1; k <= m.size(); ++k) CHECK(m[k - 1] <= m2_max(k));
  }
}

TEST_CASE("mbar3 values and structure") {
  CHECK(mbar3(1) == 1);
  CHECK(mbar3(2) == 3);
  CHECK(mbar3(4) == 4);
  CHECK(mbar3(5) == 6);
  CHECK(mbar3(20) == 13);
  CHECK(mbar3_skipped_values(4) == std::vector<std::uint64_t>{5, 9, 14, 20});

  for (std::uint64_t k = 1; k < 3000; ++k) CHECK(mbar3(k) <= mbar3(k + 1));
  for (std::uint64_t j = 0; j < 30; ++j) {
    CHECK(mbar3(kmin(3, j)) == multiplicity(3, j));
    CHECK(mbar3(kmin(3, j + 1) - 1) == multiplicity(3, j) + j);
  }

  // Image below level 8: every value up to mu_3(8) - 2 except 2 and the jumps.
  std::set<std::uint64_t> image;
  for (std::uint64_t k = 1; k < kmin(3, 8); ++k) image.insert(mbar3(k));
  std::set<std::uint64_t> expected;
  const auto skipped = mbar3_skipped_values(6);
  for (std::uint64_t v = 1; v <= multiplicity(3, 8) - 2; ++v) {
    if (v != 2 && std::find(skipped.begin(), skipped.end(), v) == skipped.end()) expected.insert(v);
  }
  CHECK(image == expected);
}

TEST_CASE("deletion matrix shape") {
  const auto spec = DeletionSpec::make(3, {1});
  CHECK(deleted_matrix(spec, 3) ==
        SpectralMatrix::validate({{0, 1, 2}, {0, 1, 2}, {0, 2, 3}}));
  const auto two = DeletionSpec::make(4, {2, 3});
  CHECK(deleted_matrix(two, 4).row(3) == Row{0, 1, 4, 5});
  CHECK_THROWS_AS(DeletionSpec::make(3, {0}), Error);
  CHECK_THROWS_AS(DeletionSpec::make(1, {2}), Error);
  CHECK_THROWS_AS(deleted_matrix(spec, 1), Error);
}

TEST_CASE("deletion calculus examples") {
  const auto s1 = DeletionSpec::make(3, {1});
  CHECK(deleted_multiplicity(s1, 0) == 1);
  CHECK(deleted_multiplicity(s1, 1) == 2);
  CHECK(deleted_multiplicity(s1, 2) == 4);
  CHECK(deleted_kmin(s1, 2) == 4);

  const auto s23 = DeletionSpec::make(4, {2, 3});
  const std::uint64_t mu[] = {1, 4, 9, 16, 26};
  const std::uint64_t first[] = {1, 2, 6, 15, 31};
  for (std::uint64_t j = 0; j < 5; ++j) {
    CHECK(deleted_multiplicity(s23, j) == mu[j]);
    CHECK(deleted_kmin(s23, j) == first[j]);
  }
}

TEST_CASE("deletion calculus identities") {
  for (std::uint64_t n = 2; n <= 5; ++n) {
    const auto empty = DeletionSpec::make(n, {});
    for (std::uint64_t j = 0; j < 20; ++j) {
      CHECK(deleted_multiplicity(empty, j) == multiplicity(n, j));
      CHECK(deleted_kmin(empty, j) == kmin(n, j));
    }
    const auto spec = DeletionSpec::make(n, {2, 5, 6});
    for (std::uint64_t j = 0; j < 20; ++j) {
      // Telescoping.
      CHECK(deleted_kmin(spec, j + 1) - deleted_kmin(spec, j) == deleted_multiplicity(spec, j));
      // What was removed is exactly the deleted columns.
      std::uint64_t removed = 0;
      for (auto l : spec.deleted) {
        if (l <= j) removed += multiplicity(n - 1, j - l);
      }
      CHECK(deleted_multiplicity(spec, j) + removed == multiplicity(n, j));
    }
    // Deleting j-1 or j-2 moves level j by the first one or two columns.
    for (std::uint64_t j = 3; j < 15; ++j) {
      const auto a = DeletionSpec::make(n, {j - 1});
      CHECK(kmin(n, j) - deleted_kmin(a, j) == 1);
      CHECK(multiplicity(n, j) - deleted_multiplicity(a, j) == n - 1);
      const auto b = DeletionSpec::make(n, {j - 2});
      CHECK(kmin(n, j) - deleted_kmin(b, j) == n);
      CHECK(multiplicity(n, j) - deleted_multiplicity(b, j) == n * (n - 1) / 2);
    }
  }
  // For three rows both jumps are a clean 2 and 3.
  CHECK(multiplicity(3, 6) - deleted_multiplicity(DeletionSpec::make(3, {5}), 6) == 2);
  CHECK(kmin(3, 6) - deleted_kmin(DeletionSpec::make(3, {4}), 6) == 3);
}

TEST_CASE("deletion calculus agrees with direct counting") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 250; ++trial) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(2, 4)(rng);
    std::set<std::uint64_t> deleted;
    const int size = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < size; ++i) deleted.insert(std::uniform_int_distribution<std::uint64_t>(1, 6)(rng));
    const auto spec = DeletionSpec::make(n, deleted);
    const std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, 8)(rng);
    const auto a = deleted_matrix(spec, std::max<std::size_t>(2, j + 1 + deleted.size()));
    CHECK(count_representations(a, static_cast<Value>(j)) == deleted_multiplicity(spec, j));

    const auto prefix =
        enumerate_spectrum(a, deleted_kmin(spec, j + 1) - 1, Truncation::Acknowledge);
    REQUIRE(prefix.entries.size() == j + 1);
    CHECK(prefix.entries.back().value == static_cast<Value>(j));
    CHECK(prefix.covered_rank == deleted_kmin(spec, j + 1) - 1);
  }
}

TEST_CASE("single deletion witnesses") {
  for (std::uint64_t k = 1; k < 400; ++k) {
    const auto w = single_deletion_witness(3, k);
    CHECK(w.multiplicity == mbar3(k));
    CHECK(w.kmin <= k);
    CHECK(k < w.kmin + w.multiplicity);
    if (k < 120) {
      const auto a = deleted_matrix(w.spec, std::max<std::uint64_t>(k, 2));
      CHECK(multiplicity_at(a, RankQuery(k)).multiplicity == w.multiplicity);
    }
  }
  for (std::uint64_t k = 1; k < 200; ++k) {
    const auto w = single_deletion_witness(4, k);
    CHECK(single_deletion_bound(4, k) == w.multiplicity);
    CHECK(w.multiplicity >= multiplicity(4, level_of(4, k)));
    CHECK(w.spec.deleted.size() <= 1);
  }
}

TEST_CASE("tables") {
  const auto t = mbar3_table(2);
  REQUIRE(t.size() == 3);
  CHECK(t[1].kmin == 2);
  CHECK(t[1].values == std::vector<std::uint64_t>{3, 3, 4});
  const auto d = single_deletion_table(4, 1);
  REQUIRE(d.size() == 2);
  CHECK(d[1].values == std::vector<std::uint64_t>{4, 4, 4, 7});
}

TEST_CASE("asymptotic ratio tends to one") {
  for (std::uint64_t n : {2u, 3u, 4u, 5u}) {
    const double r100 = asymptotic_ratio(n, 100);
    const double r1000 = asymptotic_ratio(n, 1000);
    CHECK(std::abs(r100 - 1) < 0.05);
    CHECK(std::abs(r1000 - 1) < std::abs(r100 - 1));
  }
}
