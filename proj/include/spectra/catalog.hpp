#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra::catalog {

// Named matrices, addressable from the command line:
//   harmonic:N            N harmonic rows
//   harmonic:N/del:a,b,.. harmonic rows with a,b,.. deleted from the last row
//   caseA4                two rows raised: 0 1 2 3 / 0 1 2 3 / 0 2 3 4 / 0 2 3 4
//   caseB2-4              every row moved: 0 1 3 / 0 2 3 / 0 3 / 0 3 (b_2 = 2)
//   blue11                0 1 2 3 / 0 1 2 3 / 0 2 3 4 / 0 1 3 4
//   green31               0 1 2 3 / 0 1 2 3 / 0 1 3 4 / 0 1 2 4
// Explicit rows continue in steps of 1 up to the requested length.

bool is_named(std::string_view name);

/// Throws UnknownMatrix or InvalidBounds.
SpectralMatrix named(std::string_view name, std::size_t len);

std::vector<std::string> names();

}  // namespace spectra::catalog
