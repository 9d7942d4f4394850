#include "huainf/hu.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "huainf/presentation.hpp"

namespace huainf {
namespace {

PlanarTree with_j_children(Label outer, const std::vector<int>& parts) {
  std::vector<PlanarTree> kids;
  for (std::size_t q = 0; q < parts.size(); ++q) {
    if (q) kids.push_back(PlanarTree::corolla(labels::j()));
    kids.insert(kids.end(), static_cast<std::size_t>(parts[q]), PlanarTree::unit());
  }
  return PlanarTree::graft(kids, PlanarTree::corolla(outer));
}

int total(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

Element expansion(Label l) {
  const LabelInfo& li = label_info(l);
  const int k = static_cast<int>(li.parts.size());
  switch (li.family) {
    case Family::MHu:
      return Element(with_j_children(labels::m(total(li.parts) + k - 1), li.parts));
    case Family::FHu:
      return Element(with_j_children(labels::f(total(li.parts) + k - 1, li.level), li.parts));
    case Family::V: {
      Element e(with_j_children(labels::f(1, li.level), {0, 0}));
      e.add(PlanarTree::corolla(labels::j()), -1);
      return e;
    }
    default:
      throw std::logic_error("no expansion");
  }
}

bool needs_expansion(Label l) {
  if (l == kInput) return false;
  Family f = label_info(l).family;
  return f == Family::MHu || f == Family::FHu || f == Family::V;
}

bool is_j(Label l) { return l != kInput && label_info(l).family == Family::J; }

}  // namespace

Element hu_expand(const PlanarTree& t) {
  std::map<Label, Element> images;
  for (Label l : t.code())
    if (needs_expansion(l) && !images.count(l)) images.emplace(l, expansion(l));
  if (images.empty()) return Element(t);
  return substitute_labels(t, [&](Label l) -> const Element* {
    auto it = images.find(l);
    return it == images.end() ? nullptr : &it->second;
  });
}

Element hu_expand(const Element& x) { return x.map_terms(x.arity(), [](const PlanarTree& t) { return hu_expand(t); }); }

std::optional<PlanarTree> hu_leading(const PlanarTree& t) {
  const auto& code = t.code();
  if (code.size() == 1 && is_j(code[0])) return std::nullopt;
  TreeShape s(t);
  std::vector<Label> out;
  std::function<void(int)> walk = [&](int v) {
    const Label l = s.label[static_cast<std::size_t>(v)];
    if (l != kInput && label_info(l).family == Family::StrictUnit)
      throw std::invalid_argument("hu projection: strict unit inside a tree");
    const auto& kids = s.children[static_cast<std::size_t>(v)];
    bool has_j = false;
    for (int c : kids) has_j = has_j || is_j(s.label[static_cast<std::size_t>(c)]);
    if (!has_j) {
      out.push_back(l);
      for (int c : kids) walk(c);
      return;
    }
    const LabelInfo& li = label_info(l);
    std::vector<int> parts{0};
    for (int c : kids) {
      if (is_j(s.label[static_cast<std::size_t>(c)])) parts.push_back(0);
      else ++parts.back();
    }
    if (li.family == Family::M) out.push_back(labels::m_hu(parts));
    else if (li.family == Family::F) out.push_back(labels::f_hu(parts, li.level));
    else throw std::invalid_argument("hu projection: j below an unexpected vertex");
    for (int c : kids)
      if (!is_j(s.label[static_cast<std::size_t>(c)])) walk(c);
  };
  walk(0);
  return PlanarTree(std::move(out));
}

Element hu_project(const Element& x) {
  Element result(x.arity());
  Element pending = x;
  while (!pending.is_zero()) {
    const auto [t, a] = *pending.terms().begin();
    const auto& code = t.code();
    if (code.size() == 1 && code[0] != kInput && label_info(code[0]).family == Family::StrictUnit) {
      result.add(PlanarTree::corolla(labels::i()), a);
      pending.add(t, -a);
      continue;
    }
    auto lead = hu_leading(t);
    if (!lead) {
      pending.add(t, -a);
      continue;
    }
    Element e = hu_expand(*lead);
    const mpq_class c = e.coefficient(t);
    if (c != 1 && c != -1) throw std::logic_error("hu projection: leading coefficient is not a unit");
    result.add(*lead, a * c);
    e *= a * c;
    pending -= e;
  }
  return result;
}

int nullary_weight(const PlanarTree& t) {
  int w = 0;
  for (Label l : t.code()) {
    if (l == kInput) continue;
    const LabelInfo& li = label_info(l);
    switch (li.family) {
      case Family::I: case Family::J: case Family::StrictUnit: case Family::V: ++w; break;
      case Family::MHu: case Family::FHu: w += static_cast<int>(li.parts.size()) - 1; break;
      default: break;
    }
  }
  return w;
}

}  // namespace huainf
