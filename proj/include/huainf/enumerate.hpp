#pragma once

#include <functional>
#include <map>
#include <vector>

#include "huainf/presentation.hpp"

namespace huainf {

// All planar trees with n inputs whose internal vertices are unlabeled
// corollas with arities accepted by `arity_ok`. Without a bound on internal
// vertices the set must be finite (no nullary or unary vertices), otherwise
// std::invalid_argument is thrown. Sorted, duplicate-free.
std::vector<PlanarTree> enumerate_trees(int n, const std::function<bool(int)>& arity_ok, int max_internal = -1);

// Basis of the arity-n component of a presentation. For presentations with
// nullary generators the basis is infinite; `max_nullary` bounds the number
// of nullary leaves (i, j, 1su, and the hidden j of m_{..;..}, f_{..;..}, v)
// and the bounded span is a subcomplex. Sorted.
std::vector<PlanarTree> enumerate_basis(const Presentation& p, int n, int max_nullary = 0);

// The same basis grouped by degree.
std::map<int, std::vector<PlanarTree>> basis_by_degree(const Presentation& p, int n, int max_nullary = 0);

}  // namespace huainf
