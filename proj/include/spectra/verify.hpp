#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spectra::verify {

/// One reference numeric claim replayed against the library.
struct VerifyOutcome {
  std::string claim_id;
  std::int64_t expected;
  std::int64_t computed;
  bool pass;  // expected == computed
};

struct VerifyOptions {
  unsigned threads = 1;
};

std::vector<std::string> claim_ids();

/// Runs every claim whose id starts with `prefix` (all claims when empty).
std::vector<VerifyOutcome> run_claims(std::string_view prefix = {},
                                      const VerifyOptions& options = {});

}  // namespace spectra::verify
