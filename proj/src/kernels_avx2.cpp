// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "spectra/kernels.hpp"

namespace spectra::kernels::avx2 {

void shifted_accumulate(std::span<Count> dst, std::span<const Count> src, std::size_t shift) {
  if (shift >= dst.size()) return;
  const std::size_t n = std::min(src.size(), dst.size() - shift);
  Count* out = dst.data() + shift;
  const Count* in = src.data();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i + 4));
    __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i + 4));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(a0, b0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i + 4), _mm256_add_epi64(a1, b1));
  }
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(a, b));
  }
  for (; i < n; ++i) out[i] += in[i];
}

}  // namespace spectra::kernels::avx2
