#include "spectra/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace spectra::kernels {

namespace {

using AccumulateFn = void (*)(std::span<Count>, std::span<const Count>, std::size_t);

AccumulateFn variant_for(Isa isa) noexcept {
  switch (isa) {
#if defined(SPECTRA_HAVE_AVX2)
    case Isa::Avx2: return &avx2::shifted_accumulate;
#endif
#if defined(__aarch64__)
    case Isa::Neon: return &neon::shifted_accumulate;
#endif
    default: return &scalar::shifted_accumulate;
  }
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SPECTRA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

void scalar::shifted_accumulate(std::span<Count> dst, std::span<const Count> src,
                                std::size_t shift) {
  if (shift >= dst.size()) return;
  const std::size_t n = std::min(src.size(), dst.size() - shift);
  Count* out = dst.data() + shift;
  for (std::size_t i = 0; i < n; ++i) out[i] += src[i];
}

void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift) {
  variant_for(active_isa())(dst, src, shift);
}

void convolve_indicator(std::span<const Count> src, std::span<const std::uint64_t> offsets,
                        std::span<Count> dst) {
  const AccumulateFn fn = variant_for(active_isa());
  std::fill(dst.begin(), dst.end(), Count{0});
  for (std::uint64_t offset : offsets) {
    if (offset >= dst.size()) continue;
    fn(dst, src, static_cast<std::size_t>(offset));
  }
}

std::size_t rank_position(std::span<const Count> hist, std::uint64_t rank) noexcept {
  std::uint64_t seen = 0;
  for (std::size_t v = 0; v < hist.size(); ++v) {
    seen += hist[v];
    if (seen >= rank) return v;
  }
  return hist.size();
}

}  // namespace spectra::kernels
