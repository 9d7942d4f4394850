#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "huainf/eval.hpp"
#include "huainf/tree.hpp"

// Small algebras and random maps shared by the unit and acceptance tests.
namespace huainf::fixtures {

// k<1, e> with deg e = 1, e e = 0, strict unit 1 = i.
inline Algebra unital_two_dim(Field f = Field::rationals()) {
  Algebra a;
  a.field = f;
  a.basis.add("1", 0);
  a.basis.add("e", 1);
  MultiMap m2(2, 0), i(0, 0);
  m2.add({0, 0}, 0, 1, f);
  m2.add({0, 1}, 1, 1, f);
  m2.add({1, 0}, 1, 1, f);
  i.add({}, 0, 1, f);
  a.ops["m2"] = m2;
  a.ops["i"] = i;
  return a;
}

// k<1, a, b> with deg a = 1, deg b = 2, a a = b.
inline Algebra three_dim(Field f) {
  Algebra a;
  a.field = f;
  a.basis.add("1", 0);
  a.basis.add("a", 1);
  a.basis.add("b", 2);
  MultiMap m2(2, 0), i(0, 0);
  for (int x = 0; x < 3; ++x) {
    m2.add({0, x}, x, 1, f);
    if (x) m2.add({x, 0}, x, 1, f);
  }
  m2.add({1, 1}, 2, 1, f);
  i.add({}, 0, 1, f);
  a.ops["m2"] = m2;
  a.ops["i"] = i;
  return a;
}

inline MultiMap random_map(const Algebra& src, const Algebra& tgt, int n, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  MultiMap m(n, degree);
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int q, int d) {
    if (q == n) {
      for (std::size_t b = 0; b < tgt.basis.size(); ++b)
        if (tgt.degree_of(static_cast<int>(b)) - d == degree) m.add(t, static_cast<int>(b), coef(rng), src.field);
      return;
    }
    for (std::size_t x = 0; x < src.basis.size(); ++x) {
      t[static_cast<std::size_t>(q)] = static_cast<int>(x);
      rec(q + 1, d + src.degree_of(static_cast<int>(x)));
    }
  };
  rec(0, 0);
  return m;
}

inline Morphism random_morphism(const Algebra& src, const Algebra& tgt, int n_max, bool unit_f1, std::mt19937& rng) {
  Morphism f;
  f.components["f1"] = unit_f1 ? identity_map(src) : random_map(src, tgt, 1, 0, rng);
  for (int n = 2; n <= n_max; ++n) f.components["f" + std::to_string(n)] = random_map(src, tgt, n, 1 - n, rng);
  return f;
}

inline bool caught(const Algebra& a) {
  if (!validate(a).empty()) return true;
  return !(check_ainf_algebra(a, 5).pass() && check_hu_algebra(a, 6).pass() && check_fukaya_plus(a, 5).pass());
}

// Independent oracle: grow trees by replacing inputs with corollas, starting
// from the unit tree, and collect every shape with n inputs.
inline std::size_t oracle_count(int n) {
  std::set<std::vector<Label>> seen, frontier;
  frontier.insert(PlanarTree::unit().code());
  seen = frontier;
  while (!frontier.empty()) {
    std::set<std::vector<Label>> next;
    for (const auto& code : frontier) {
      const int inputs = static_cast<int>(std::count(code.begin(), code.end(), kInput));
      for (std::size_t pos = 0; pos < code.size(); ++pos) {
        if (code[pos] != kInput) continue;
        for (int a = 2; inputs - 1 + a <= n; ++a) {
          std::vector<Label> c(code.begin(), code.begin() + static_cast<long>(pos));
          c.push_back(labels::corolla(a));
          c.insert(c.end(), static_cast<std::size_t>(a), kInput);
          c.insert(c.end(), code.begin() + static_cast<long>(pos) + 1, code.end());
          if (seen.insert(c).second) next.insert(c);
        }
      }
    }
    frontier = std::move(next);
  }
  std::size_t count = 0;
  for (const auto& c : seen)
    if (std::count(c.begin(), c.end(), kInput) == n) ++count;
  return count;
}

}  // namespace huainf::fixtures
