#pragma once

#include <cstdint>
#include <vector>

#include "zhualg/structure_algebra.hpp"

namespace zhualg {

struct WedderburnResult {
    std::vector<long> block_dims;  // sorted ascending, sum of squares = dim
    int retries = 0;               // spectral re-draws that were needed
};

// Numeric Wedderburn block dimensions of a semisimple structure algebra:
// embeds the left regular representation over complex floats, solves the
// commutation system for the center, and splits it along the eigenspaces of
// a random (seeded) center element, retrying on near-degenerate spectra.
// Requires radical_dim(alg) == 0; throws SpectralError when the spectrum
// stays degenerate after the retry budget.
WedderburnResult wedderburn_numeric(const StructureAlgebra& alg, std::uint64_t seed = 12345);

}  // namespace zhualg
