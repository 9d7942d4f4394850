#pragma once

#include <optional>

#include "huainf/element.hpp"

namespace huainf {

// The embedding of A-infinity^hu (resp. F_1^hu with `levels` floors) into the
// strict-unit presentation: m_{n1;...;nk} -> (1^n1 (x) j (x) ... (x) 1^nk) m_{n+k-1},
// f_{...} likewise, v -> j f_1 - j rho_0.
Element hu_expand(const PlanarTree& t);
Element hu_expand(const Element& x);

// Projection along the complement spanned by (1su - i) rho_0 and j rho_0.
// Throws std::invalid_argument on trees that are not in strict-unit normal
// form.
Element hu_project(const Element& x);

// Leading hu tree of a strict-unit normal tree (j children absorbed into
// semicolon labels, j f_1 read as v); nullopt for a lone j.
std::optional<PlanarTree> hu_leading(const PlanarTree& t);

// Number of nullary leaves i, j of the expanded form of a tree.
int nullary_weight(const PlanarTree& t);

}  // namespace huainf
