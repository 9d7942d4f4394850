#include "huainf/homotopy.hpp"

#include <stdexcept>

#include "huainf/enumerate.hpp"
#include "huainf/notation.hpp"

namespace huainf {
namespace {

const Presentation& fbar() {
  static const Presentation p = Presentation::fbar1();
  return p;
}

const Presentation& regular() {
  static const Presentation p = Presentation::as_regular();
  return p;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// lambda(args; y) for y over `target`.
Element left_act(const Presentation& target, const std::vector<PlanarTree>& args, const Element& y) {
  if (y.is_zero()) return Element(0);
  std::vector<Element> a;
  for (const auto& t : args) a.emplace_back(t);
  return target.compose(a, y);
}

// y with m placed on its last input.
Element m_on_last(const Element& y) {
  std::vector<Element> a(static_cast<std::size_t>(y.arity()), Element(PlanarTree::unit()));
  a.back() = Element(PlanarTree::corolla(labels::as(2)));
  return fbar().compose(a, y);
}

Element per_key(const Element& x, const Presentation& target, int out_arity_shift,
                const std::function<Element(const std::vector<int>&)>& on_generator) {
  (void)out_arity_shift;
  Element out(x.arity());
  for (const auto& [t, c] : x.terms()) {
    FbarKey key = split_left_action(t);
    Element img = left_act(target, key.args, on_generator(key.parts));
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace

FbarKey split_left_action(const PlanarTree& t) {
  TreeShape s(t);
  FbarKey key;
  std::vector<int> floors;
  const Label root = s.label[0];
  if (root == kInput) throw std::invalid_argument("split_left_action: not an F-bar_1 tree");
  if (label_info(root).family == Family::F) {
    floors.push_back(0);
  } else if (label_info(root).family == Family::AsOp) {
    floors = s.children[0];
  } else {
    throw std::invalid_argument("split_left_action: not an F-bar_1 tree");
  }
  for (int v : floors) {
    const Label l = s.label[static_cast<std::size_t>(v)];
    if (l == kInput || label_info(l).family != Family::F) throw std::invalid_argument("split_left_action: not in normal form");
    key.parts.push_back(label_info(l).arity);
    for (int c : s.children[static_cast<std::size_t>(v)]) {
      const Label a = s.label[static_cast<std::size_t>(c)];
      if (a == kInput) key.args.push_back(PlanarTree::unit());
      else key.args.push_back(PlanarTree::corolla(a));
      if (a != kInput)
        for (int g : s.children[static_cast<std::size_t>(c)])
          if (s.label[static_cast<std::size_t>(g)] != kInput) throw std::invalid_argument("split_left_action: not in normal form");
    }
  }
  return key;
}

PlanarTree fbar_generator(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("fbar_generator: empty");
  if (parts.size() == 1) return PlanarTree::corolla(labels::f(parts[0]));
  std::vector<PlanarTree> kids;
  for (int i : parts) kids.push_back(PlanarTree::corolla(labels::f(i)));
  return PlanarTree::graft(kids, PlanarTree::corolla(labels::as(static_cast<int>(parts.size()))));
}

Element map_p(const Element& x) {
  return per_key(x, regular(), 0, [](const std::vector<int>& parts) {
    for (int i : parts)
      if (i != 1) return Element(sum(parts));
    const int k = static_cast<int>(parts.size());
    if (k == 1) return Element(PlanarTree::corolla(labels::regular_unit()));
    std::vector<Label> code{labels::regular_unit(), labels::as(k)};
    code.insert(code.end(), static_cast<std::size_t>(k), kInput);
    return Element(PlanarTree(std::move(code)));
  });
}

Element map_beta(const Element& y) {
  const Element f1(PlanarTree::corolla(labels::f(1)));
  return fbar().normalize(substitute_labels(y, [&](Label l) -> const Element* {
    return l == labels::regular_unit() ? &f1 : nullptr;
  }));
}

Element map_h(const Element& x) {
  return per_key(x, fbar(), 0, [](const std::vector<int>& parts) {
    const std::size_t k = parts.size();
    if (k < 2 || parts[k - 1] != 1) return Element(sum(parts));
    std::vector<int> q(parts.begin(), parts.end() - 1);
    q.back() += 1;
    return Element(fbar_generator(q));
  });
}

Element map_N_bruteforce(const Element& x) {
  const Presentation& p = fbar();
  Element out = x;
  out -= map_beta(map_p(x));
  out += p.differential(map_h(x));
  out += map_h(p.differential(x));
  return out;
}

Element map_N_closed(const Element& x) {
  return per_key(x, fbar(), 0, [](const std::vector<int>& parts) {
    const std::size_t k = parts.size();
    const int n = sum(parts);
    if (k == 1 || parts[k - 1] > 2) return Element(n);
    if (parts[k - 1] == 2) {
      std::vector<int> q(parts.begin(), parts.end() - 1);
      q.back() += 1;
      return m_on_last(Element(fbar_generator(q)));
    }
    if (parts[k - 2] > 1) {
      std::vector<int> q(parts.begin(), parts.end() - 1);
      return m_on_last(Element(fbar_generator(q)));
    }
    bool all_ones = true;
    for (int i : parts) all_ones = all_ones && i == 1;
    std::vector<int> q(parts.begin(), parts.end() - 1);
    Element out = m_on_last(Element(fbar_generator(q)));
    if (all_ones) {
      // - m^(k) f_1
      std::vector<Element> a{Element(PlanarTree::corolla(labels::as(static_cast<int>(k))))};
      out -= fbar().compose(a, Element(PlanarTree::corolla(labels::f(1))));
    }
    return out;
  });
}

Element apply_N(const Element& x, int times) {
  Element y = x;
  for (int a = 0; a < times && !y.is_zero(); ++a) y = map_N_closed(y);
  return y;
}

Element neumann_inverse(const Element& x, int terms) {
  Element out = x;
  Element y = x;
  for (int a = 1; a <= terms && !y.is_zero(); ++a) {
    y = map_N_closed(y);
    out += y;
  }
  return out;
}

HomotopyReport verify_homotopy_arity(int n, int max_power) {
  HomotopyReport rep;
  rep.max_arity = n;
  const Presentation& p = fbar();
  auto fail = [&](const PlanarTree& t, const std::string& what) {
    ++rep.failures;
    if (rep.witnesses.size() < 10) rep.witnesses.push_back(what + " on " + format_tree(t, true));
  };
  for (const auto& t : enumerate_basis(p, n)) {
    ++rep.keys;
    const Element x(t);
    const Element nb = map_N_bruteforce(x);
    const Element nc = map_N_closed(x);
    if (!(nb == nc)) fail(t, "closed N differs from brute-force N");
    Element rhs = map_h(p.differential(x)) + p.differential(map_h(x)) + x - nc;
    if (!(map_beta(map_p(x)) == rhs)) fail(t, "p beta != h d + d h + 1 - N");
    const int k = floor_count(t);
    for (const auto& [u, c] : nc.terms())
      if (floor_count(u) >= k) fail(t, "N does not lower the filtration");
    if (!apply_N(x, k).is_zero()) fail(t, "N^k != 0");
    Element s = neumann_inverse(x, max_power);
    if (!(s - map_N_closed(s) == x)) fail(t, "(1 - N) sum N^a != 1");
    if (!(map_N_closed(p.differential(x)) == p.differential(nc))) fail(t, "N is not a chain map");
    if (!map_p(p.differential(x)).is_zero()) fail(t, "p is not a chain map");
  }
  for (const auto& t : enumerate_basis(regular(), n)) {
    const Element y(t);
    if (!(map_p(map_beta(y)) == y)) fail(t, "beta p != 1");
  }
  return rep;
}

HomotopyReport verify_homotopy_lemma(int max_arity, int max_power) {
  HomotopyReport rep;
  rep.max_arity = max_arity;
  for (int n = 1; n <= max_arity; ++n) {
    HomotopyReport r = verify_homotopy_arity(n, max_power);
    rep.keys += r.keys;
    rep.failures += r.failures;
    for (auto& w : r.witnesses)
      if (rep.witnesses.size() < 10) rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

}  // namespace huainf
