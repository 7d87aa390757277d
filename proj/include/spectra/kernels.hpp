#pragma once

// Histogram kernels behind the bounded-entry spectrum route. Every kernel has
// a portable scalar reference; vector variants are selected once at startup
// from the running CPU and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>

namespace spectra::kernels {

using Count = std::uint64_t;

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa) noexcept;

/// Best variant compiled in and supported by this CPU.
Isa detected_isa() noexcept;

Isa active_isa() noexcept;

/// Returns false (and changes nothing) if `isa` is unavailable here.
bool set_active_isa(Isa isa) noexcept;

bool isa_available(Isa isa) noexcept;

/// dst[shift + i] += src[i] for every i with shift + i < dst.size().
void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift);

/// dst[v] = sum over offsets o <= v of src[v - o]; dst is overwritten.
/// `offsets` must be nonnegative. Entries of src beyond dst.size() are ignored.
void convolve_indicator(std::span<const Count> src, std::span<const std::uint64_t> offsets,
                        std::span<Count> dst);

/// Smallest v with hist[0] + ... + hist[v] >= rank, or hist.size() if the
/// total is below rank.
std::size_t rank_position(std::span<const Count> hist, std::uint64_t rank) noexcept;

namespace scalar {
void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift);
}

#if defined(SPECTRA_HAVE_AVX2)
namespace avx2 {
void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift);
}
#endif

#if defined(__aarch64__)
namespace neon {
void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift);
}
#endif

}  // namespace spectra::kernels
