#include "huainf/coalgebra.hpp"

#include <map>
#include <stdexcept>

#include "huainf/generators.hpp"
#include "huainf/hu.hpp"
#include "huainf/koszul.hpp"
#include "huainf/notation.hpp"

namespace huainf {
namespace {

void require_bimodule(const Presentation& p) {
  const Flavor f = p.flavor();
  if (p.is_operad() || (f != Flavor::F1 && f != Flavor::F1Su && f != Flavor::F1Hu))
    throw std::invalid_argument("coalgebra: expected F_1, F_1^su or F_1^hu, got " + p.name());
}

// Delta on a presentation without hu labels.
Element delta_plain(const Presentation& p, const Element& x, int level) {
  const Presentation target = p.with_levels(p.levels() + 1);
  std::map<Label, Element> images;
  auto image = [&](Label l) -> const Element* {
    if (l == kInput) return nullptr;
    const LabelInfo& li = label_info(l);
    if (!li.on_floor()) return nullptr;
    if (li.family != Family::F) throw std::logic_error("delta: unexpanded floor label " + li.name);
    auto it = images.find(l);
    if (it != images.end()) return &it->second;
    Element e(li.arity);
    if (li.level > level) {
      e = Element(PlanarTree::corolla(labels::at_level(l, li.level + 1)));
    } else if (li.level == level) {
      // f_n -> sum over i_1 + ... + i_k = n of (f_i1 (x) ... (x) f_ik) f_k'
      const int n = li.arity;
      for (int k = 1; k <= n; ++k)
        for (const auto& parts : semicolon_patterns(n, k)) {
          // sign (-1)^(sum_q (i_q - 1)(q - 1))
          std::vector<Element> args;
          int s = 0;
          for (std::size_t q = 0; q < parts.size(); ++q) {
            args.emplace_back(PlanarTree::corolla(labels::f(parts[q] + 1, level)));
            s += parts[q] * static_cast<int>(q);
          }
          Element term = target.compose(args, Element(PlanarTree::corolla(labels::f(k, level + 1))));
          term *= parity_sign(s);
          e += term;
        }
    } else {
      return nullptr;
    }
    return &images.emplace(l, std::move(e)).first->second;
  };
  return target.normalize(substitute_labels(x, image));
}

Element counit_plain(const Presentation& p, const Element& x, int level) {
  const Presentation target = counit_target(p);
  std::map<Label, Element> images;
  auto image = [&](Label l) -> const Element* {
    if (l == kInput) return nullptr;
    const LabelInfo& li = label_info(l);
    if (!li.on_floor()) return nullptr;
    if (li.family != Family::F) throw std::logic_error("counit: unexpanded floor label " + li.name);
    auto it = images.find(l);
    if (it != images.end()) return &it->second;
    Element e(li.arity);
    if (li.level > level) e = Element(PlanarTree::corolla(labels::at_level(l, li.level - 1)));
    else if (li.level == level && li.arity == 1) e = Element(PlanarTree::unit());
    else if (li.level != level) return nullptr;
    return &images.emplace(l, std::move(e)).first->second;
  };
  return target.normalize(substitute_labels(x, image));
}

}  // namespace

Presentation counit_target(const Presentation& p) {
  require_bimodule(p);
  return p.levels() == 1 ? p.operad() : p.with_levels(p.levels() - 1);
}

Element delta(const Presentation& p, const Element& x, int level) {
  require_bimodule(p);
  if (level < 1 || level > p.levels()) throw std::invalid_argument("delta: level out of range");
  if (!p.is_hu()) return delta_plain(p, x, level);
  const Presentation amb = p.ambient();
  return hu_project(delta_plain(amb, hu_expand(x), level));
}

Element counit(const Presentation& p, const Element& x, int level) {
  require_bimodule(p);
  if (level < 1 || level > p.levels()) throw std::invalid_argument("counit: level out of range");
  if (!p.is_hu()) return counit_plain(p, x, level);
  return hu_project(counit_plain(p.ambient(), hu_expand(x), level));
}

std::vector<PlanarTree> coalgebra_keys(const Presentation& p, int bound) {
  require_bimodule(p);
  std::vector<PlanarTree> out;
  for (Label l : generators(p, bound)) out.push_back(PlanarTree::corolla(l));
  return out;
}

CoalgebraReport verify_coalgebra(const Presentation& p, const std::vector<PlanarTree>& keys) {
  require_bimodule(p);
  CoalgebraReport rep;
  rep.presentation = p.name();
  const Presentation p2 = p.with_levels(p.levels() + 1);
  auto fail = [&](const PlanarTree& t, const std::string& what) {
    ++rep.failures;
    if (rep.witnesses.size() < 10) rep.witnesses.push_back(what + " on " + format_tree(t, true));
  };
  for (const auto& t : keys) {
    ++rep.keys;
    const Element x = p.element(t);
    const Element d = delta(p, x);
    if (!(delta(p2, d, 1) == delta(p2, d, 2))) fail(t, "not coassociative");
    if (!(counit(p2, d, 1) == x)) fail(t, "left counit law fails");
    if (!(counit(p2, d, 2) == x)) fail(t, "right counit law fails");
    if (!(delta(p, p.differential(x)) == p2.differential(d))) fail(t, "not a chain map");
  }
  return rep;
}

}  // namespace huainf
