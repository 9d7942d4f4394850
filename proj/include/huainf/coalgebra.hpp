#pragma once

#include <string>
#include <vector>

#include "huainf/presentation.hpp"

namespace huainf {

// F (.)_O F is modelled by two-floor trees: floor level 1 (near the inputs)
// holds the first tensor factor, level 2 (near the root) the second. With
// O = A-infinity these trees form a basis, so equality is decidable.

// Comultiplication applied to the floors at `level` of an element over `p`
// (F_1, F_1^su or F_1^hu with L floors); floors above `level` move one level
// down. The result lives over p.with_levels(L + 1).
Element delta(const Presentation& p, const Element& x, int level = 1);
// Counit applied to the floors at `level`; the result lives over
// p.with_levels(L - 1), or over the operad when L == 1.
Element counit(const Presentation& p, const Element& x, int level = 1);
Presentation counit_target(const Presentation& p);

struct CoalgebraReport {
  std::string presentation;
  std::size_t keys = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  bool pass() const { return failures == 0; }
};

// Coassociativity, both counit laws and d Delta = Delta d on `keys`.
CoalgebraReport verify_coalgebra(const Presentation& p, const std::vector<PlanarTree>& keys);
// Keys used by default: generators f_n, n <= bound, for F_1 and F_1^su; for
// F_1^hu the generators with n + k <= bound (v included).
std::vector<PlanarTree> coalgebra_keys(const Presentation& p, int bound);

}  // namespace huainf
