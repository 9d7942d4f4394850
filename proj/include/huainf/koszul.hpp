#pragma once

#include <cstddef>
#include <span>

namespace huainf {

// Sign of reordering graded symbols under the Koszul rule.
// perm[k] is the index (into degrees) of the symbol placed at position k.
// Each pair of symbols whose relative order is reversed contributes
// (-1)^(deg_a * deg_b). Returns +1 or -1.
int koszul_sign(std::span<const int> degrees, std::span<const std::size_t> perm);

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace huainf
