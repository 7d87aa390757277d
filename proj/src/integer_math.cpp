#include "spectra/integer_math.hpp"

#include <limits>
#include <numeric>

#include "spectra/error.hpp"

namespace spectra {

std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  // result_i = C(n - r + i, i) stays integral at every step; the 128-bit
  // intermediate keeps result * (n - r + i) exact before the division.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  auto value = checked_binomial(n, r);
  if (!value) {
    throw Error(ErrorKind::Overflow,
                "binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") exceeds 64 bits");
  }
  return *value;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::numeric_limits<std::uint64_t>::max();
    result = *next;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Newton iteration from an overestimate converges monotonically down.
  std::uint64_t x = n / 2 + 1;
  std::uint64_t y = (x + n / x) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

}  // namespace spectra
