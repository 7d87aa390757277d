#pragma once

#include <cstdint>
#include <optional>

namespace spectra {

// Exact unsigned helpers. The checked_* variants return nullopt on
// overflow; binomial() throws Error{Overflow}.

std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) noexcept;
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept;

/// C(n, r) by the multiplicative formula, exact. Zero when r > n.
std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t r) noexcept;
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// base^exp, clamped to UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// floor(sqrt(n)) without floating point.
std::uint64_t isqrt(std::uint64_t n) noexcept;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace spectra
