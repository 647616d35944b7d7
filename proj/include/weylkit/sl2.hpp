#pragma once

#include <map>

#include "weylkit/rational.hpp"

namespace weylkit {

// Isotypic multiplicities of an integrable sl2-character from its weight
// dimensions: mult(m) = dim V_m - dim V_{m+2} for m >= 0. Rejects weight
// data that is not symmetric under m <-> -m or yields a negative count.
std::map<long, long> decompose_sl2_dims(const std::map<long, long>& dims);

// Inverse direction: expand multiplicities back into weight dimensions
// (each L(m) contributes 1 to weights m, m-2, ..., -m).
std::map<long, long> expand_sl2_mults(const std::map<long, long>& mults);

}  // namespace weylkit
