#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "spectra/kernels.hpp"

using namespace spectra::kernels;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

// Restores the dispatch choice when a test is done with it.
struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_active_isa(saved); }
};

std::vector<Count> naive_convolve(const std::vector<Count>& src,
                                  const std::vector<std::uint64_t>& offsets, std::size_t width) {
  std::vector<Count> out(width, 0);
  for (std::size_t v = 0; v < width; ++v) {
    for (auto o : offsets) {
      if (o <= v && v - o < src.size()) out[v] += src[v - o];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("dispatch reports a usable variant") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(isa_available(detected_isa()));
  IsaGuard guard;
  CHECK(set_active_isa(Isa::Scalar));
  CHECK(active_isa() == Isa::Scalar);
  MESSAGE("detected kernel variant: " << std::string(isa_name(detected_isa())));
}

TEST_CASE("vector variants agree with the scalar reference") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Count> value(0, 1ull << 40);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dst_len = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
    const std::size_t src_len = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
    const std::size_t shift = std::uniform_int_distribution<std::size_t>(0, 75)(rng);
    std::vector<Count> src(src_len), base(dst_len);
    for (auto& v : src) v = value(rng);
    for (auto& v : base) v = value(rng);

    std::vector<Count> expected = base;
    scalar::shifted_accumulate(expected, src, shift);
#if defined(SPECTRA_HAVE_AVX2)
    if (isa_available(Isa::Avx2)) {
      std::vector<Count> got = base;
      avx2::shifted_accumulate(got, src, shift);
      CHECK(got == expected);
    }
#endif
#if defined(__aarch64__)
    std::vector<Count> got = base;
    neon::shifted_accumulate(got, src, shift);
    CHECK(got == expected);
#endif
  }
}

TEST_CASE("shifted_accumulate respects both ends") {
  std::vector<Count> dst(6, 1);
  const std::vector<Count> src{10, 20, 30, 40, 50};
  shifted_accumulate(dst, src, 3);
  CHECK(dst == std::vector<Count>{1, 1, 1, 11, 21, 31});
  shifted_accumulate(dst, src, 6);
  CHECK(dst == std::vector<Count>{1, 1, 1, 11, 21, 31});
}

TEST_CASE("convolve_indicator matches a direct double loop on every variant") {
  IsaGuard guard;
  std::mt19937_64 rng(9);
  for (Isa isa : available()) {
    REQUIRE(set_active_isa(isa));
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t width = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
      std::vector<Count> src(std::uniform_int_distribution<std::size_t>(1, 45)(rng));
      for (auto& v : src) v = std::uniform_int_distribution<Count>(0, 1000)(rng);
      std::vector<std::uint64_t> offsets;
      for (std::uint64_t o = 0; o < 50; ++o) {
        if (std::bernoulli_distribution(0.3)(rng)) offsets.push_back(o);
      }
      std::vector<Count> got(width);
      convolve_indicator(src, offsets, got);
      CHECK(got == naive_convolve(src, offsets, width));
    }
  }
}

TEST_CASE("rank_position") {
  const std::vector<Count> hist{1, 0, 3, 2};
  CHECK(rank_position(hist, 1) == 0);
  CHECK(rank_position(hist, 2) == 2);
  CHECK(rank_position(hist, 4) == 2);
  CHECK(rank_position(hist, 5) == 3);
  CHECK(rank_position(hist, 6) == 3);
  CHECK(rank_position(hist, 7) == 4);
  CHECK(rank_position({}, 1) == 0);
}
