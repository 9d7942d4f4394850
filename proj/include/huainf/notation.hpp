#pragma once

#include <string>
#include <string_view>

#include "huainf/element.hpp"

namespace huainf {

// Textual tree notation, read left to right as a composite of tensor factors:
//   1                 the unit tree
//   m2, f3', i        a corolla
//   (x1⊗...⊗xr)L      vertex L with children x1..xr (1 marks an input)
//   x·L               vertex L with the single non-input child x
//   x·ρ∅              a nullary element of a bimodule with no floor
// ASCII forms: '*' for ⊗ (inside parentheses), '.' for ·, rho0 for ρ∅.
// The printed coefficient refers to the factor order of the text, so it
// differs from the stored (tetris order) coefficient by a Koszul sign.
std::string format_tree(const PlanarTree& t, bool bimodule = false);
std::string format_element(const Element& x, bool bimodule = false);

// Sign of moving factors from tetris order to the reading order of the text.
int notation_sign(const PlanarTree& t);

// Parses a linear combination such as "1 - (1⊗i)m2" or "2 m3 + 1/2 (m2*1)m2".
// Throws std::invalid_argument with a position on malformed input.
Element parse_element(std::string_view text);

}  // namespace huainf
