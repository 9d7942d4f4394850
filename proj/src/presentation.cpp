#include "huainf/presentation.hpp"

#include <mutex>
#include <stdexcept>

#include "huainf/hu.hpp"
#include "huainf/koszul.hpp"

namespace huainf {

struct Presentation::Cache {
  std::mutex mutex;
  std::map<Label, Element> images;
};

namespace {

PlanarTree node(Label l, std::vector<PlanarTree> kids) { return PlanarTree::graft(kids, PlanarTree::corolla(l)); }

// (1^r (x) x (x) 1^t) placed on the inputs of `outer` (a corolla label).
PlanarTree insert_at(Label outer, int r, const PlanarTree& x, int t) {
  std::vector<PlanarTree> kids(static_cast<std::size_t>(r), PlanarTree::unit());
  kids.push_back(x);
  kids.insert(kids.end(), static_cast<std::size_t>(t), PlanarTree::unit());
  return node(outer, kids);
}

void compositions(int n, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 0) {
    if (n == 0) fn(cur);
    return;
  }
  for (int a = 1; a <= n - (parts - 1); ++a) {
    cur.push_back(a);
    compositions(n - a, parts - 1, cur, fn);
    cur.pop_back();
  }
}

// m_n d = - sum (-1)^(jp+q) (1^j (x) m_p (x) 1^q) m_{j+1+q}
Element ainf_m(int n) {
  Element out(n);
  for (int p = 2; p < n; ++p)
    for (int jj = 0; jj + p <= n; ++jj) {
      int q = n - jj - p;
      out.add(insert_at(labels::m(jj + 1 + q), jj, PlanarTree::corolla(labels::m(p)), q), -parity_sign(jj * p + q));
    }
  return out;
}

// f_k d = sum (-1)^(t+rn) (1^r (x) m_n (x) 1^t) f_{r+1+t}
//       - sum (-1)^sigma (f_i1 (x) ... (x) f_il) m_l
Element f1_f(int k) {
  Element out(k);
  for (int n = 2; n <= k; ++n)
    for (int r = 0; r + n <= k; ++r) {
      int t = k - r - n;
      out.add(insert_at(labels::f(r + 1 + t), r, PlanarTree::corolla(labels::m(n)), t), parity_sign(t + r * n));
    }
  std::vector<int> cur;
  for (int l = 2; l <= k; ++l)
    compositions(k, l, cur, [&](const std::vector<int>& is) {
      long sigma = 0;
      std::vector<PlanarTree> kids;
      for (std::size_t q = 0; q < is.size(); ++q) {
        sigma += static_cast<long>(q) * (is[q] - 1);
        kids.push_back(PlanarTree::corolla(labels::f(is[q])));
      }
      out.add(node(labels::m(l), kids), -parity_sign(sigma));
    });
  return out;
}

// F-bar_1: f_k d = sum (-1)^t (1^r (x) m (x) 1^t) f_{k-1} + sum_{i+j=k} (-1)^j (f_i (x) f_j) m
Element fbar_f(int k) {
  Element out(k);
  const Label m = labels::as(2);
  for (int r = 0; r + 2 <= k; ++r) {
    int t = k - r - 2;
    out.add(insert_at(labels::f(k - 1), r, PlanarTree::corolla(m), t), parity_sign(t));
  }
  for (int i = 1; i < k; ++i) {
    int jj = k - i;
    out.add(node(m, {PlanarTree::corolla(labels::f(i)), PlanarTree::corolla(labels::f(jj))}), parity_sign(jj));
  }
  return out;
}

Label relevel(Label l, int from, int to) {
  const LabelInfo& li = label_info(l);
  if (!li.on_floor() || li.level != from) return l;
  return labels::at_level(l, to);
}

PlanarTree relabel_tree(const PlanarTree& t, const std::function<Label(Label)>& f) {
  std::vector<Label> code = t.code();
  for (Label& l : code)
    if (l != kInput) l = f(l);
  return PlanarTree(std::move(code));
}

bool as_family(Label l) { return l != kInput && label_info(l).family == Family::AsOp; }

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::As: return "as";
    case Flavor::Ass: return "ass";
    case Flavor::Ainf: return "ainf";
    case Flavor::AinfSu: return "ainf-su";
    case Flavor::AinfHu: return "ainf-hu";
    case Flavor::F1: return "f1";
    case Flavor::F1Bar: return "fbar1";
    case Flavor::AsRegular: return "as-regular";
    case Flavor::F1Su: return "f1-su";
    case Flavor::F1Hu: return "f1-hu";
  }
  return "?";
}

Presentation::Presentation(Flavor f, int levels)
    : flavor_(f), levels_(levels), overrides_(std::make_shared<std::map<Label, Element>>()),
      cache_(std::make_shared<Cache>()) {}

Presentation Presentation::make(Flavor f, int levels) {
  const bool operad = f == Flavor::As || f == Flavor::Ass || f == Flavor::Ainf || f == Flavor::AinfSu || f == Flavor::AinfHu;
  if (operad && levels != 0) throw std::invalid_argument("operads have no floors");
  if (!operad && levels < 1) throw std::invalid_argument("bimodules need at least one floor");
  if ((f == Flavor::F1Bar || f == Flavor::AsRegular) && levels != 1)
    throw std::invalid_argument("only one floor supported for this bimodule");
  return Presentation(f, levels);
}

Presentation Presentation::as_operad() { return make(Flavor::As, 0); }
Presentation Presentation::ass_operad() { return make(Flavor::Ass, 0); }
Presentation Presentation::a_infinity() { return make(Flavor::Ainf, 0); }
Presentation Presentation::a_su_ij() { return make(Flavor::AinfSu, 0); }
Presentation Presentation::a_hu() { return make(Flavor::AinfHu, 0); }
Presentation Presentation::f1(int levels) { return make(Flavor::F1, levels); }
Presentation Presentation::fbar1() { return make(Flavor::F1Bar, 1); }
Presentation Presentation::as_regular() { return make(Flavor::AsRegular, 1); }
Presentation Presentation::f1_su(int levels) { return make(Flavor::F1Su, levels); }
Presentation Presentation::f1_hu(int levels) { return make(Flavor::F1Hu, levels); }

std::string Presentation::name() const {
  std::string s = flavor_name(flavor_);
  if (levels_ > 1) s += "^" + std::to_string(levels_);
  return s;
}

Presentation Presentation::with_convention(SignConvention c) const {
  Presentation p(flavor_, levels_);
  p.convention_ = c;
  p.overrides_ = overrides_;
  return p;
}

Presentation Presentation::with_levels(int levels) const {
  Presentation p = make(flavor_, levels);
  p.convention_ = convention_;
  p.overrides_ = overrides_;
  return p;
}

Presentation Presentation::with_override(Label l, const Element& image) const {
  Presentation p(flavor_, levels_);
  p.convention_ = convention_;
  auto m = std::make_shared<std::map<Label, Element>>(*overrides_);
  (*m)[l] = image;
  p.overrides_ = m;
  return p;
}

Presentation Presentation::ambient() const {
  Presentation p(flavor_, levels_);
  if (flavor_ == Flavor::AinfHu) p = Presentation(Flavor::AinfSu, 0);
  else if (flavor_ == Flavor::F1Hu) p = Presentation(Flavor::F1Su, levels_);
  p.convention_ = convention_;
  return p;
}

Presentation Presentation::operad() const {
  Flavor f = flavor_;
  switch (flavor_) {
    case Flavor::F1: f = Flavor::Ainf; break;
    case Flavor::F1Bar: case Flavor::AsRegular: f = Flavor::As; break;
    case Flavor::F1Su: f = Flavor::AinfSu; break;
    case Flavor::F1Hu: f = Flavor::AinfHu; break;
    default: break;
  }
  Presentation p(f, 0);
  p.convention_ = convention_;
  if (f == flavor_) p.overrides_ = overrides_;
  return p;
}

bool Presentation::normalize_in_place(TreeBuilder& b) const {
  if (is_su()) {
    // innermost 1su first; every step removes at least one vertex
    while (true) {
      int best = -1, best_depth = -1;
      std::vector<std::pair<int, int>> stack{{b.root(), 0}};
      while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        const auto& n = b.node(v);
        if (n.label != kInput && label_info(n.label).family == Family::StrictUnit && n.parent >= 0 && d > best_depth) {
          best = v;
          best_depth = d;
        }
        for (int c : n.kids) stack.emplace_back(c, d + 1);
      }
      if (best < 0) return true;
      const int par = b.node(best).parent;
      const LabelInfo& pi = label_info(b.node(par).label);
      if (pi.family == Family::M && pi.arity == 2) {
        const auto& kids = b.node(par).kids;
        b.replace_by_child(par, kids[0] == best ? kids[1] : kids[0]);
      } else if (pi.family == Family::F && pi.arity == 1) {
        b.replace_by_child(par, best);
      } else {
        return false;
      }
    }
  }
  if (flavor_ == Flavor::As || flavor_ == Flavor::Ass || flavor_ == Flavor::F1Bar || flavor_ == Flavor::AsRegular) {
    while (true) {
      int par = -1, child = -1;
      std::vector<int> stack{b.root()};
      while (!stack.empty() && child < 0) {
        int v = stack.back();
        stack.pop_back();
        const auto& n = b.node(v);
        if (as_family(n.label))
          for (int c : n.kids)
            if (as_family(b.node(c).label)) {
              par = v;
              child = c;
              break;
            }
        for (int c : n.kids) stack.push_back(c);
      }
      if (child < 0) return true;
      const int merged = label_arity(b.node(par).label) + label_arity(b.node(child).label) - 1;
      if (merged == 1) {
        const auto& kids = b.node(par).kids;
        b.replace_by_child(par, kids[0] == child ? kids[1] : kids[0]);
      } else {
        b.absorb_child(par, child, labels::as(merged));
      }
    }
  }
  return true;
}

std::pair<PlanarTree, int> Presentation::normalize(TreeBuilder b) const {
  if (!normalize_in_place(b)) return {PlanarTree(), 0};
  auto [t, s] = b.canonical();
  if (flavor_ == Flavor::As && t.arity() == 0) return {PlanarTree(), 0};
  if (flavor_ == Flavor::AsRegular && t.arity() == 0) return {PlanarTree(), 0};
  return {std::move(t), s};
}

Element Presentation::normalize(const Element& x) const {
  Element out(x.arity());
  for (const auto& [t, c] : x.terms()) {
    auto [n, s] = normalize(TreeBuilder(t));
    if (s != 0) out.add(n, c * s);
  }
  return out;
}

Element Presentation::element(const PlanarTree& t, const mpq_class& c) const { return normalize(Element(t, c)); }

const Element& Presentation::generator_differential(Label l) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->images.find(l);
    if (it != cache_->images.end()) return it->second;
  }
  Element img = compute_generator_differential(l);
  std::lock_guard lock(cache_->mutex);
  return cache_->images.emplace(l, std::move(img)).first->second;
}

Element Presentation::compute_generator_differential(Label l) const {
  auto ov = overrides_->find(l);
  if (ov != overrides_->end()) return ov->second;
  const LabelInfo& li = label_info(l);
  if (li.on_floor() && li.level != 1) {
    const Label base = labels::at_level(l, 1);
    const Element img = with_levels(1).generator_differential(base);
    Element out(li.arity);
    for (const auto& [t, c] : img.terms())
      out.add(relabel_tree(t, [&](Label x) { return relevel(x, 1, li.level); }), c);
    return out;
  }
  if (!li.on_floor() && !is_operad()) return operad().generator_differential(l);
  if (is_hu()) {
    Presentation amb = ambient().with_levels(is_operad() ? 0 : 1);
    return hu_project(amb.differential(hu_expand(PlanarTree::corolla(l))));
  }
  switch (li.family) {
    case Family::M:
      if (flavor_ == Flavor::Ainf || flavor_ == Flavor::AinfSu) return ainf_m(li.arity);
      break;
    case Family::I:
    case Family::StrictUnit:
      if (is_su()) return Element(0);
      break;
    case Family::J:
      if (is_su()) {
        Element out(0);
        out.add(PlanarTree::corolla(labels::strict_unit()), 1);
        out.add(PlanarTree::corolla(labels::i()), -1);
        return out;
      }
      break;
    case Family::AsOp:
      if (flavor_ == Flavor::As || flavor_ == Flavor::Ass) return Element(li.arity);
      break;
    case Family::RegularUnit:
      if (flavor_ == Flavor::AsRegular) return Element(1);
      break;
    case Family::F:
      if (flavor_ == Flavor::F1 || flavor_ == Flavor::F1Su) return normalize(f1_f(li.arity));
      if (flavor_ == Flavor::F1Bar) return fbar_f(li.arity);
      break;
    default:
      break;
  }
  throw std::invalid_argument("generator " + li.name + " has no differential in " + name());
}

Element Presentation::differential(const PlanarTree& t) const {
  Element out(t.arity());
  const std::vector<std::size_t> order = t.tetris_order();
  std::vector<int> deg;
  for (std::size_t v : order) deg.push_back(label_degree(t.code()[v]));
  long total = 0;
  for (int d : deg) total += d;
  long before = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const long after = total - before - deg[k];
    const int sign = parity_sign(convention_ == SignConvention::LaterFactors ? after : before);
    before += deg[k];
    const Element& img = generator_differential(t.code()[order[k]]);
    for (const auto& [r, c] : img.terms()) {
      TreeBuilder b(t);
      b.substitute(static_cast<int>(order[k]), r);
      auto [n, s] = normalize(std::move(b));
      if (s != 0) out.add(n, c * (sign * s));
    }
  }
  return out;
}

Element Presentation::differential(const Element& x) const {
  Element out(x.arity());
  for (const auto& [t, c] : x.terms()) {
    Element d = differential(t);
    d *= c;
    out += d;
  }
  return out;
}

Element Presentation::compose(std::span<const Element> args, const Element& outer) const {
  if (static_cast<int>(args.size()) != outer.arity()) throw std::invalid_argument("compose: arity mismatch");
  int arity = 0;
  for (const auto& a : args) arity += a.arity();
  Element out(arity);
  std::vector<PlanarTree> trees(args.size());
  std::function<void(std::size_t, mpq_class)> rec = [&](std::size_t q, mpq_class coef) {
    if (q == args.size()) {
      for (const auto& [base, c] : outer.terms()) {
        auto [n, s] = normalize(TreeBuilder::graft(trees, base));
        if (s != 0) out.add(n, coef * c * s);
      }
      return;
    }
    for (const auto& [t, c] : args[q].terms()) {
      trees[q] = t;
      rec(q + 1, coef * c);
    }
  };
  rec(0, 1);
  return out;
}

Element substitute_labels(const PlanarTree& t, const std::function<const Element*(Label)>& image) {
  Element out(t.arity());
  std::vector<std::pair<int, const Element*>> slots;
  for (std::size_t v : t.tetris_order())
    if (const Element* e = image(t.code()[v])) slots.emplace_back(static_cast<int>(v), e);
  std::vector<const PlanarTree*> pick(slots.size());
  std::function<void(std::size_t, mpq_class)> rec = [&](std::size_t q, mpq_class coef) {
    if (q == slots.size()) {
      TreeBuilder b(t);
      for (std::size_t s = 0; s < slots.size(); ++s) b.substitute(slots[s].first, *pick[s]);
      auto [n, sign] = b.canonical();
      out.add(n, coef * sign);
      return;
    }
    for (const auto& [r, c] : slots[q].second->terms()) {
      pick[q] = &r;
      rec(q + 1, coef * c);
    }
  };
  rec(0, 1);
  return out;
}

Element substitute_labels(const Element& x, const std::function<const Element*(Label)>& image) {
  return x.map_terms(x.arity(), [&](const PlanarTree& t) { return substitute_labels(t, image); });
}

int floor_count(const PlanarTree& t) {
  int n = 0;
  for (Label l : t.code())
    if (l != kInput && label_info(l).on_floor()) ++n;
  return n;
}

}  // namespace huainf
