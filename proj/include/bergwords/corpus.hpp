#pragma once

#include <vector>

#include "bergwords/spectral.hpp"

namespace bergwords {

// Every valid matrix (nonnegative, unimodular, hyperbolic) with entry sum
// <= sigma_max, ordered by sigma ascending, then (k, l, m, n) lexicographic.
std::vector<AutomorphismMatrix> valid_matrices_up_to_sigma(long sigma_max);

} // namespace bergwords
