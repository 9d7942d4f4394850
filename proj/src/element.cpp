#include "huainf/element.hpp"

#include <stdexcept>

namespace huainf {

Element::Element(const PlanarTree& t, const mpq_class& c) : arity_(t.arity()) { add(t, c); }

mpq_class Element::coefficient(const PlanarTree& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Element::add(const PlanarTree& t, const mpq_class& c) {
  if (t.arity() != arity_) throw std::invalid_argument("Element: arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (terms_.empty()) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (terms_.empty()) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

Element& Element::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

Element Element::map_terms(int arity, const std::function<Element(const PlanarTree&)>& f) const {
  Element out(arity);
  for (const auto& [t, c] : terms_) {
    Element img = f(t);
    if (img.is_zero()) continue;
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace huainf
