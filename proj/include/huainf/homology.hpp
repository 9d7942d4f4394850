#pragma once

#include <optional>
#include <string>
#include <vector>

#include "huainf/linalg.hpp"
#include "huainf/presentation.hpp"

namespace huainf {

struct HomologyReport {
  std::string presentation;
  int arity = 0;
  int max_nullary = 0;
  std::vector<HomologyDegree> degrees;  // ascending
  bool composite_zero = true;           // d o d vanished on every basis element

  const HomologyDegree* at(int degree) const;
  std::size_t homology(int degree) const;
};

// Homology of the arity-n component over the field, in degrees [lo, hi]
// (all degrees of the basis when no window is given). For presentations with
// nullary generators the complex is the span of trees with at most
// `max_nullary` nullary leaves.
HomologyReport chain_homology(const Presentation& p, int n, int max_nullary = 0, Field f = Field::rationals(),
                              std::optional<int> lo = std::nullopt, std::optional<int> hi = std::nullopt);

}  // namespace huainf
