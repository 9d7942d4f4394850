#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "huainf/element.hpp"

namespace huainf {

enum class Flavor {
  As,         // As: m^(n), n >= 2, no differential
  Ass,        // Ass: m^(n), n >= 0
  Ainf,       // A-infinity, generators m_n
  AinfSu,     // A-infinity^su<i,j> in strict-unit normal form
  AinfHu,     // A-infinity^hu: generators i and m_{n1;...;nk}
  F1,         // F_1 over A-infinity (levels >= 1 gives tensor powers over A-infinity)
  F1Bar,      // F-bar_1 over As
  AsRegular,  // the regular As-bimodule, generated by 1F
  F1Su,       // F_1^su<i,j>
  F1Hu,       // F_1^hu
};

enum class SignConvention {
  LaterFactors,    // d at the i-th tetris factor carries (-1)^(sum of later degrees)
  EarlierFactors,  // (-1)^(sum of earlier degrees)
};

std::string flavor_name(Flavor f);

// A free (or normal-form) dg-operad or operad bimodule. Bimodule elements
// live on trees with `levels` floors; levels > 1 models the tensor power
// F (.)_O ... (.)_O F through multi-floor trees. Operads have levels == 0.
class Presentation {
 public:
  static Presentation as_operad();
  static Presentation ass_operad();
  static Presentation a_infinity();
  static Presentation a_su_ij();
  static Presentation a_hu();
  static Presentation f1(int levels = 1);
  static Presentation fbar1();
  static Presentation as_regular();
  static Presentation f1_su(int levels = 1);
  static Presentation f1_hu(int levels = 1);
  static Presentation make(Flavor f, int levels);

  Flavor flavor() const { return flavor_; }
  int levels() const { return levels_; }
  bool is_operad() const { return levels_ == 0; }
  bool is_hu() const { return flavor_ == Flavor::AinfHu || flavor_ == Flavor::F1Hu; }
  bool is_su() const { return flavor_ == Flavor::AinfSu || flavor_ == Flavor::F1Su; }
  SignConvention convention() const { return convention_; }
  std::string name() const;

  // Same generators, other sign rule / another number of floors.
  Presentation with_convention(SignConvention c) const;
  Presentation with_levels(int levels) const;
  // Replaces the differential image of one generator (mutation testing).
  Presentation with_override(Label l, const Element& image) const;
  // The strict-unit presentation an hu presentation is embedded in.
  Presentation ambient() const;
  // The operad acting on the bimodule (the operad itself for operads).
  Presentation operad() const;

  // Brings a tree into normal form; returns the coefficient sign (0 when
  // the tree vanishes) and the normal tree.
  std::pair<PlanarTree, int> normalize(TreeBuilder b) const;
  Element normalize(const Element& x) const;
  Element element(const PlanarTree& t, const mpq_class& c = 1) const;

  // d of a generator, as an element over this presentation.
  const Element& generator_differential(Label l) const;
  Element differential(const Element& x) const;
  Element differential(const PlanarTree& t) const;

  // Operadic composition (grafting) followed by normalization.
  Element compose(std::span<const Element> args, const Element& outer) const;

 private:
  struct Cache;
  Presentation(Flavor f, int levels);
  Element compute_generator_differential(Label l) const;
  bool normalize_in_place(TreeBuilder& b) const;

  Flavor flavor_;
  int levels_;
  SignConvention convention_ = SignConvention::LaterFactors;
  std::shared_ptr<const std::map<Label, Element>> overrides_;
  std::shared_ptr<Cache> cache_;
};

// Replaces every vertex whose label has an image by that image (an element
// of trees with the same arity and degree), expanding multilinearly. The
// result is not normalized.
Element substitute_labels(const PlanarTree& t, const std::function<const Element*(Label)>& image);
Element substitute_labels(const Element& x, const std::function<const Element*(Label)>& image);

// Number of floor vertices of a tree.
int floor_count(const PlanarTree& t);

}  // namespace huainf
