#pragma once

#include <vector>

#include "huainf/presentation.hpp"

namespace huainf {

// All semicolon patterns (n1;...;nk) with k parts, entries >= 0, n + k == size.
std::vector<std::vector<int>> semicolon_patterns(int size, int k);

// Generators of a presentation up to a size bound: arity n for m_n / f_n,
// n + k for m_{n1;...;nk} / f_{n1;...;nk} (v counts as size 2). Ordered by
// size, then pattern.
std::vector<Label> generators(const Presentation& p, int bound);

}  // namespace huainf
