#include "huainf/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "huainf/hu.hpp"

namespace huainf {
namespace {

using Code = std::vector<Label>;

// Distributes (n inputs, c nullary leaves) over `arity` ordered children and
// concatenates their codes after `head`.
void distribute(const Code& head, int arity, int n, int c, const std::function<const std::vector<Code>&(int, int)>& child,
                std::vector<Code>& out) {
  std::vector<const Code*> pick;
  std::function<void(int, int, int)> rec = [&](int k, int left_n, int left_c) {
    if (k == arity) {
      if (left_n != 0 || left_c != 0) return;
      Code code = head;
      for (const Code* p : pick) code.insert(code.end(), p->begin(), p->end());
      out.push_back(std::move(code));
      return;
    }
    for (int a = 0; a <= left_n; ++a)
      for (int b = 0; b <= left_c; ++b) {
        if (a + b == 0) continue;
        // leave room: every remaining child needs at least one leaf
        if ((left_n - a) + (left_c - b) < arity - k - 1) continue;
        for (const Code& cc : child(a, b)) {
          pick.push_back(&cc);
          rec(k + 1, left_n - a, left_c - b);
          pick.pop_back();
        }
      }
  };
  rec(0, n, c);
}

// Region grammar for trees with `levels` floors. Region r counts the floor
// vertices between a vertex and the root; inputs live in region `levels`.
class Grammar {
 public:
  enum class Ops { Ainf, As };
  int levels = 0;
  Ops ops = Ops::Ainf;
  std::vector<Label> nullary;  // leaves usable in every region
  bool floors_f = true;        // f_a floors (else 1F)

  const std::vector<Code>& gen(int r, int n, int c, bool allow_op_root) {
    auto key = std::make_tuple(r, n, c, allow_op_root);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Code> out;
    if (r == levels && n == 1 && c == 0) out.push_back({kInput});
    if (n == 0 && c == 1)
      for (Label l : nullary) out.push_back({l});
    if (allow_op_root) {
      for (int a = 2; a <= n + c; ++a) {
        Label l = ops == Ops::Ainf ? labels::m(a) : labels::as(a);
        const bool collapse = ops == Ops::As;
        distribute({l}, a, n, c, [&, r, collapse](int nn, int cc) -> const std::vector<Code>& {
          return gen(r, nn, cc, !collapse);
        }, out);
      }
    }
    if (r < levels) {
      const int level = levels - r;
      const int max_a = floors_f ? n + c : 1;
      for (int a = 1; a <= max_a; ++a) {
        Label l = floors_f ? labels::f(a, level) : labels::regular_unit();
        distribute({l}, a, n, c, [&, r](int nn, int cc) -> const std::vector<Code>& { return gen(r + 1, nn, cc, true); },
                   out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::tuple<int, int, int, bool>, std::vector<Code>> memo_;
};

std::vector<PlanarTree> finish(std::vector<PlanarTree> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int n, const std::function<bool(int)>& arity_ok, int max_internal) {
  if (max_internal < 0 && (arity_ok(0) || arity_ok(1)))
    throw std::invalid_argument("enumerate_trees: nullary or unary vertices need a bound on internal vertices");
  const int budget_cap = max_internal < 0 ? std::max(n, 1) : max_internal;
  std::map<std::pair<int, int>, std::vector<Code>> memo;  // (inputs, exact internal count)
  std::function<const std::vector<Code>&(int, int)> gen = [&](int k, int b) -> const std::vector<Code>& {
    auto key = std::make_pair(k, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Code> out;
    if (k == 1 && b == 0) out.push_back({kInput});
    if (b > 0) {
      const int max_a = arity_ok(0) ? k + b - 1 : k;  // nullary children consume budget only
      for (int a = 0; a <= max_a; ++a) {
        if (!arity_ok(a)) continue;
        // split k inputs and b-1 vertices over a children
        std::vector<const Code*> pick;
        std::function<void(int, int, int)> rec = [&](int q, int lk, int lb) {
          if (q == a) {
            if (lk || lb) return;
            Code code{labels::corolla(a)};
            for (const Code* p : pick) code.insert(code.end(), p->begin(), p->end());
            out.push_back(std::move(code));
            return;
          }
          for (int x = 0; x <= lk; ++x)
            for (int y = 0; y <= lb; ++y)
              for (const Code& cc : gen(x, y)) {
                pick.push_back(&cc);
                rec(q + 1, lk - x, lb - y);
                pick.pop_back();
              }
        };
        rec(0, k, b - 1);
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::vector<PlanarTree> out;
  for (int b = 0; b <= budget_cap; ++b)
    for (const Code& c : gen(n, b)) out.emplace_back(c);
  return finish(std::move(out));
}

std::vector<PlanarTree> enumerate_basis(const Presentation& p, int n, int max_nullary) {
  std::vector<PlanarTree> out;
  switch (p.flavor()) {
    case Flavor::As:
      if (n >= 2) out.push_back(PlanarTree::corolla(labels::as(n)));
      if (n == 1) out.push_back(PlanarTree::unit());
      return out;
    case Flavor::Ass:
      if (n != 1) out.push_back(PlanarTree::corolla(labels::as(n)));
      else out.push_back(PlanarTree::unit());
      return out;
    case Flavor::AsRegular:
      if (n >= 2) {
        Code c{labels::regular_unit(), labels::as(n)};
        c.insert(c.end(), static_cast<std::size_t>(n), kInput);
        out.emplace_back(std::move(c));
      }
      if (n == 1) out.push_back(PlanarTree::corolla(labels::regular_unit()));
      return out;
    default:
      break;
  }
  Grammar g;
  g.levels = p.levels();
  g.ops = p.flavor() == Flavor::F1Bar ? Grammar::Ops::As : Grammar::Ops::Ainf;
  const bool unital = p.is_hu() || p.is_su();
  if (unital) g.nullary = {labels::i(), labels::j()};
  else max_nullary = 0;
  for (int c = 0; c <= max_nullary; ++c)
    for (const Code& code : g.gen(0, n, c, true)) {
      PlanarTree t(code);
      if (p.is_hu()) {
        auto lead = hu_leading(t);
        if (lead) out.push_back(*lead);
      } else {
        out.push_back(std::move(t));
      }
    }
  if (p.is_su() && n == 0 && max_nullary >= 1) out.push_back(PlanarTree::corolla(labels::strict_unit()));
  return finish(std::move(out));
}

std::map<int, std::vector<PlanarTree>> basis_by_degree(const Presentation& p, int n, int max_nullary) {
  std::map<int, std::vector<PlanarTree>> out;
  for (auto& t : enumerate_basis(p, n, max_nullary)) out[t.degree()].push_back(t);
  return out;
}

}  // namespace huainf
