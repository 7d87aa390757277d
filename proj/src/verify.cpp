#include "spectra/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spectra/catalog.hpp"
#include "spectra/harmonic.hpp"
#include "spectra/search.hpp"
#include "spectra/spectrum.hpp"

namespace spectra::verify {

namespace {

struct Claim {
  std::string id;
  std::int64_t expected;
  std::function<std::int64_t(const VerifyOptions&)> compute;
};

// Reference lower-bound blocks: values of m(k) for k in [kmin(j), kmin(j+1)).
constexpr const char* kMbar3Blocks[] = {
    "1",
    "3 3 4",
    "6 6 6 7 7 8",
    "10 10 10 10 11 11 11 12 12 13",
    "15 15 15 15 15 16 16 16 16 17 17 17 18 18 19",
    "21 21 21 21 21 21 22 22 22 22 22 23 23 23 23 24 24 24 25 25 26",
    "28 28 28 28 28 28 28 29 29 29 29 29 29 30 30 30 30 30 31 31 31 31 32 32 32 33 33 34",
};

// Four rows, one value deleted from the last harmonic row.
constexpr const char* kSingleDeletion4Blocks[] = {
    "1",
    "4 4 4 7",
    "10 10 10 10 10 10 14 14 14 17",
    "20 20 20 20 20 20 20 20 20 20 25 25 25 25 25 25 29 29 29 32",
};

// Four rows, searched maxima.
constexpr const char* kSearched4Blocks[] = {
    "1",
    "4 4 5 7",
    "10 10 10 10 10 12 14 14 14 17",
    "20 20 20 20 20 20 20 21 21 23 25 25 25 25 25 26 29 29 29 32",
};

std::vector<std::int64_t> parse_block(const char* text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  for (std::int64_t v; in >> v;) out.push_back(v);
  return out;
}

std::int64_t searched_max(std::uint64_t n, std::uint64_t k, std::uint64_t max_entry,
                          const VerifyOptions& options) {
  search::SearchOptions opts;
  opts.threads = options.threads;
  opts.check_saturation = false;
  const auto bounds = search::bounds_for(n, k, {max_entry, std::nullopt});
  return static_cast<std::int64_t>(search::search_max(bounds, opts).best);
}

std::int64_t multiplicity_of(const SpectralMatrix& a, std::uint64_t k) {
  return static_cast<std::int64_t>(multiplicity_at(a, RankQuery(k)).multiplicity);
}

std::vector<Claim> build_claims() {
  std::vector<Claim> claims;
  auto add = [&](std::string id, std::int64_t expected, auto fn) {
    claims.push_back({std::move(id), expected, std::function<std::int64_t(const VerifyOptions&)>(fn)});
  };

  // Harmonic multiplicities and first labellings, N = 3.
  const std::int64_t mu3[] = {1, 3, 6, 10, 15};
  const std::int64_t kmin3[] = {1, 2, 5, 11, 21};
  for (std::uint64_t j = 0; j < 5; ++j) {
    add("harmonic.mu3.j" + std::to_string(j), mu3[j], [j](const VerifyOptions&) {
      return multiplicity_of(harmonic::matrix(3, harmonic::kmin(3, j)), harmonic::kmin(3, j));
    });
    add("harmonic.kmin3.j" + std::to_string(j), kmin3[j], [j](const VerifyOptions&) {
      return static_cast<std::int64_t>(harmonic::kmin(3, j));
    });
  }
  add("harmonic.n4.k6", 10, [](const VerifyOptions&) {
    return multiplicity_of(harmonic::matrix(4, 6), 6);
  });

  // Two rows: closed form against the harmonic prefix and the search.
  add("n2.closed_form_vs_harmonic.k1-200", 200, [](const VerifyOptions&) {
    std::int64_t agree = 0;
    const auto a = harmonic::matrix(2, 200);
    const auto seq = multiplicity_sequence(a, 200);
    for (std::uint64_t k = 1; k <= 200; ++k) agree += seq[k - 1] == harmonic::m2_max(k);
    return agree;
  });
  for (std::uint64_t k = 1; k <= 15; ++k) {
    add("n2.search.k" + std::to_string(k), static_cast<std::int64_t>(harmonic::m2_max(k)),
        [k](const VerifyOptions& o) { return searched_max(2, k, 6, o); });
  }

  // Exhaustive small values.
  const std::int64_t n3[] = {1, 3, 3, 4, 6};
  const std::int64_t n4[] = {1, 4, 4, 5, 7};
  for (std::uint64_t k = 1; k <= 5; ++k) {
    add("n3.search.m" + std::to_string(k), n3[k - 1],
        [k](const VerifyOptions& o) { return searched_max(3, k, 3, o); });
  }
  for (std::uint64_t k = 1; k <= 5; ++k) {
    add("n4.search.m" + std::to_string(k), n4[k - 1],
        [k](const VerifyOptions& o) { return searched_max(4, k, 3, o); });
  }

  // N = 4 searched lower bounds past the exhaustive range, B = 6.
  for (std::uint64_t j = 2; j < std::size(kSearched4Blocks); ++j) {
    const auto block = parse_block(kSearched4Blocks[j]);
    const std::uint64_t first = harmonic::kmin(4, j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::uint64_t k = first + i;
      add("n4.table.k" + std::to_string(k), block[i],
          [k](const VerifyOptions& o) { return searched_max(4, k, 6, o); });
    }
  }

  // N = 3 lower-bound table, closed form and deletion witness.
  for (std::uint64_t j = 0; j < std::size(kMbar3Blocks); ++j) {
    const auto block = parse_block(kMbar3Blocks[j]);
    const std::uint64_t first = harmonic::kmin(3, j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::uint64_t k = first + i;
      add("mbar3.k" + std::to_string(k), block[i],
          [k](const VerifyOptions&) { return static_cast<std::int64_t>(harmonic::mbar3(k)); });
      add("mbar3.witness.k" + std::to_string(k), block[i], [k](const VerifyOptions&) {
        const auto w = harmonic::single_deletion_witness(3, k);
        return multiplicity_of(harmonic::deleted_matrix(w.spec, std::max<std::uint64_t>(k, 2)), k);
      });
    }
  }

  // N = 4 single-deletion table.
  for (std::uint64_t j = 0; j < std::size(kSingleDeletion4Blocks); ++j) {
    const auto block = parse_block(kSingleDeletion4Blocks[j]);
    const std::uint64_t first = harmonic::kmin(4, j);
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::uint64_t k = first + i;
      add("deletion4.k" + std::to_string(k), block[i], [k](const VerifyOptions&) {
        const auto w = harmonic::single_deletion_witness(4, k);
        return multiplicity_of(harmonic::deleted_matrix(w.spec, std::max<std::uint64_t>(k, 2)), k);
      });
    }
  }

  // Jump constructions for four rows.
  add("n4.jump.del1.k5", 7, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("harmonic:4/del:1", 5), 5);
  });
  add("n4.jump.del1.k12", 14, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("harmonic:4/del:1", 12), 12);
  });
  add("n4.jump.del2.k15", 17, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("harmonic:4/del:2", 15), 15);
  });
  add("n4.harmonic.k16", 20, [](const VerifyOptions&) {
    return multiplicity_of(harmonic::matrix(4, 16), 16);
  });

  // Deletion calculus for S = {2, 3}.
  const auto s23 = harmonic::DeletionSpec::make(4, {2, 3});
  const std::int64_t mu23[] = {1, 4, 9, 16, 26};
  const std::int64_t kmin23[] = {1, 2, 6, 15, 31};
  for (std::uint64_t j = 0; j < 5; ++j) {
    add("del23.mu.j" + std::to_string(j), mu23[j], [s23, j](const VerifyOptions&) {
      return static_cast<std::int64_t>(harmonic::deleted_multiplicity(s23, j));
    });
    add("del23.kmin.j" + std::to_string(j), kmin23[j], [s23, j](const VerifyOptions&) {
      return static_cast<std::int64_t>(harmonic::deleted_kmin(s23, j));
    });
  }
  add("del23.enumerated.k31", 26, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("harmonic:4/del:2,3", 31), 31);
  });
  add("del23.enumerated.lambda31", 4, [](const VerifyOptions&) {
    const auto a = catalog::named("harmonic:4/del:2,3", 31);
    return static_cast<std::int64_t>(multiplicity_at(a, RankQuery(31)).lambda);
  });

  // Explicit four-row witnesses.
  add("witness.caseA4.k4", 5, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("caseA4", 4), 4);
  });
  add("witness.caseA4.k5", 5, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("caseA4", 5), 5);
  });
  add("witness.caseB2-4.k4", 5, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("caseB2-4", 4), 4);
  });
  add("witness.blue11.k11", 12, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("blue11", 11), 11);
  });
  add("witness.green31.k31", 26, [](const VerifyOptions&) {
    return multiplicity_of(catalog::named("green31", 31), 31);
  });

  return claims;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const Claim& c : registry()) out.push_back(c.id);
  return out;
}

std::vector<VerifyOutcome> run_claims(std::string_view prefix, const VerifyOptions& options) {
  std::vector<VerifyOutcome> out;
  for (const Claim& c : registry()) {
    if (!std::string_view(c.id).starts_with(prefix)) continue;
    const std::int64_t computed = c.compute(options);
    out.push_back({c.id, c.expected, computed, computed == c.expected});
  }
  return out;
}

}  // namespace spectra::verify
