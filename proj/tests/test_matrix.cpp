#include <limits>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "spectra/error.hpp"
#include "spectra/matrix.hpp"

using namespace spectra;

namespace {

ErrorKind kind_of(std::vector<Row> rows) {
  try {
    SpectralMatrix::validate(std::move(rows));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("validate accepts strictly increasing rows") {
  auto a = SpectralMatrix::validate({{0, 1, 2}, {0, 1, 2}});
  CHECK(a.num_rows() == 2);
  auto b = SpectralMatrix::validate({{3, 4}, {5, 7}});
  CHECK(b.num_rows() == 2);
  CHECK(b.ground_value() == 8);
  auto c = SpectralMatrix::validate({{-5, 0, 9}, {1}});
  CHECK(c.shortest_row() == 1);
  CHECK(c.longest_row() == 3);
}

TEST_CASE("validate rejects malformed input") {
  CHECK(kind_of({{0, 1, 1}}) == ErrorKind::NonIncreasingRow);
  CHECK(kind_of({{0, 2, 1}}) == ErrorKind::NonIncreasingRow);
  CHECK(kind_of({{0, 1}, {}}) == ErrorKind::EmptyRow);
  CHECK(kind_of({}) == ErrorKind::EmptyRow);
  const Value huge = std::numeric_limits<Value>::max() / 2;
  CHECK(kind_of({{0, huge}, {0, 1}}) == ErrorKind::OverflowRisk);
  CHECK(kind_of({{std::numeric_limits<Value>::min(), 0}}) == ErrorKind::OverflowRisk);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(SpectralMatrix::validate({{3, 4}, {5, 7}})) ==
        SpectralMatrix::validate({{0, 1}, {0, 2}}));
  CHECK(normalize(SpectralMatrix::validate({{0, 2, 4}, {0, 2}})) ==
        SpectralMatrix::validate({{0, 1}, {0, 1, 2}}));
  const auto h = SpectralMatrix::validate({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  CHECK(normalize(h) == h);
  CHECK(is_canonical(h));
  // A lone zero in every row: gcd of the empty set is taken as 1.
  const auto z = SpectralMatrix::validate({{7}, {-2}});
  CHECK(normalize(z) == SpectralMatrix::validate({{0}, {0}}));
}

TEST_CASE("normalize is idempotent and canonical on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = SpectralMatrix::validate(oracle::random_rows(rng, 4, 5, -20, 20));
    auto c = normalize(a);
    CHECK(normalize(c) == c);
    CHECK(is_canonical(c));
    for (const Row& r : c.rows()) CHECK(r.front() == 0);
  }
}

TEST_CASE("flattened order") {
  auto a = SpectralMatrix::validate({{0, 1}, {0, 2}});
  auto b = SpectralMatrix::validate({{0, 1, 2}, {0}});
  CHECK(flattened_less(a, b));  // 0 1 0 2 < 0 1 2 0
  CHECK_FALSE(flattened_less(b, a));
  CHECK_FALSE(flattened_less(a, a));
  auto c = SpectralMatrix::validate({{0}, {0, 1}});
  auto d = SpectralMatrix::validate({{0, 0 + 1}, {0}});
  CHECK(flattened_less(c, d) != flattened_less(d, c));
}

TEST_CASE("scaled and truncated copies") {
  auto a = SpectralMatrix::validate({{0, 1, 3}, {0, 2}});
  CHECK(a.scaled(3) == SpectralMatrix::validate({{0, 3, 9}, {0, 6}}));
  CHECK(a.truncated(1) == SpectralMatrix::validate({{0}, {0}}));
  CHECK_THROWS_AS(a.scaled(0), Error);
}
