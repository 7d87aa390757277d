#if defined(__aarch64__)
#include <arm_neon.h>

#include <algorithm>

#include "spectra/kernels.hpp"

namespace spectra::kernels::neon {

void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift) {
  if (shift >= dst.size()) return;
  const std::size_t n = std::min(src.size(), dst.size() - shift);
  Count* out = dst.data() + shift;
  const Count* in = src.data();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(out + i, vaddq_u64(vld1q_u64(out + i), vld1q_u64(in + i)));
  }
  for (; i < n; ++i) out[i] += in[i];
}

}  // namespace spectra::kernels::neon
#endif
