#pragma once

#include <optional>
#include <string>
#include <vector>

#include "huainf/instance.hpp"
#include "huainf/presentation.hpp"
#include "huainf/report.hpp"

namespace huainf {

// Names accepted by presentation_by_name, sorted.
std::vector<std::string> presentation_names();
// ainf, as, ass, ainf-su, ainf-hu, f1, fbar1, f1-su, f1-hu, as-regular.
// Throws std::invalid_argument for other names.
Presentation presentation_by_name(const std::string& name);
// Whether the basis needs a bound on nullary leaves to be finite.
bool has_nullary_generators(const Presentation& p);

// ainf, hu-algebra, morphism, hu-morphism or unitality, picked from the
// document contents.
std::string default_check_mode(const Instance& inst);
// Checks a document as `mode` (empty: default_check_mode). Size bound per
// mode when unset. Throws std::invalid_argument when the document lacks the
// data the mode needs.
Report check_instance(const Instance& inst, std::string mode = "", std::optional<int> arity_max = std::nullopt);
// g.h: the target algebra of g must equal the source algebra of h. Throws
// std::invalid_argument otherwise.
Instance compose_instances(const Instance& g, const Instance& h, int arity_max = 5);

}  // namespace huainf
