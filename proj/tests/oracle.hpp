#pragma once

// Test-only reference computations. Deliberately naive: full Cartesian
// products and direct enumeration, sharing no code with the library paths
// they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<std::int64_t>>;

inline std::vector<std::int64_t> all_sums(const Rows& rows) {
  std::vector<std::int64_t> sums{0};
  for (const auto& row : rows) {
    std::vector<std::int64_t> next;
    for (auto s : sums) {
      for (auto v : row) next.push_back(s + v);
    }
    sums.swap(next);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

/// Sorted (value, multiplicity) groups of the full product multiset.
inline std::vector<std::pair<std::int64_t, std::uint64_t>> grouped(const Rows& rows) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> out;
  for (auto s : all_sums(rows)) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.push_back({s, 1});
    }
  }
  return out;
}

/// m(k) for every k over the full product.
inline std::vector<std::uint64_t> multiplicities(const Rows& rows) {
  std::vector<std::uint64_t> out;
  for (auto [v, m] : grouped(rows)) out.insert(out.end(), m, m);
  return out;
}

inline std::uint64_t count(const Rows& rows, std::int64_t lambda) {
  auto sums = all_sums(rows);
  return static_cast<std::uint64_t>(std::count(sums.begin(), sums.end(), lambda));
}

/// Random strictly increasing row with entries in [lo, hi].
inline std::vector<std::int64_t> random_row(std::mt19937_64& rng, std::size_t max_len,
                                            std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> pool;
  for (auto v = lo; v <= hi; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t cap = std::min(max_len, pool.size());
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  pool.resize(len);
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline Rows random_rows(std::mt19937_64& rng, std::size_t max_n, std::size_t max_len,
                        std::int64_t lo, std::int64_t hi) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  Rows rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_row(rng, max_len, lo, hi));
  return rows;
}

}  // namespace oracle
