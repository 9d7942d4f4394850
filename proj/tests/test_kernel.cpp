#include <vector>

#include "doctest.h"
#include "huainf/element.hpp"
#include "huainf/koszul.hpp"
#include "huainf/tree.hpp"

using namespace huainf;

namespace {
PlanarTree c(int n) { return PlanarTree::corolla(labels::corolla(n)); }
}  // namespace

TEST_CASE("koszul_sign examples") {
  std::vector<int> d11{1, 1};
  std::vector<std::size_t> id2{0, 1}, sw{1, 0};
  CHECK(koszul_sign(d11, id2) == 1);
  CHECK(koszul_sign(d11, sw) == -1);
  std::vector<int> d23{2, 3}, d12{1, 2};
  CHECK(koszul_sign(d23, sw) == 1);
  CHECK(koszul_sign(d12, sw) == 1);
  std::vector<int> d111{1, 1, 1};
  std::vector<std::size_t> rev{2, 1, 0};
  CHECK(koszul_sign(d111, rev) == -1);
  std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS(koszul_sign(d11, bad));
}

TEST_CASE("tetris order") {
  CHECK(PlanarTree::unit().tetris_order().empty());
  CHECK(c(3).tetris_order() == std::vector<std::size_t>{0});
  // ((..).) : root at 0, child corolla at 1
  std::vector<PlanarTree> args{c(2), PlanarTree::unit()};
  PlanarTree t = PlanarTree::graft(args, c(2));
  CHECK(t.tetris_order() == std::vector<std::size_t>{1, 0});
  CHECK(t.arity() == 3);
}

TEST_CASE("graft") {
  std::vector<PlanarTree> units{PlanarTree::unit(), PlanarTree::unit()};
  CHECK(PlanarTree::graft(units, c(2)) == c(2));
  std::vector<PlanarTree> one{c(3)};
  CHECK(PlanarTree::graft(one, PlanarTree::unit()) == c(3));
  std::vector<PlanarTree> two{c(2), c(2)};
  PlanarTree t = PlanarTree::graft(two, c(2));
  CHECK(t.arity() == 4);
  CHECK(t.internal_count() == 3);
  CHECK_THROWS(PlanarTree::graft(one, c(2)));
}

TEST_CASE("builder canonical sign") {
  // two odd vertices grafted in lexicographic order vs tetris order
  Label jj = labels::j();
  Label m2 = labels::m(2);
  std::vector<PlanarTree> args{PlanarTree::corolla(jj), PlanarTree::corolla(jj)};
  auto b = TreeBuilder::graft(args, PlanarTree::corolla(m2));
  auto [t, s] = b.canonical();
  CHECK(s == 1);
  CHECK(t.arity() == 0);
  CHECK(t.degree() == -2);
  // m3 (degree -1) with j grafted: order j, m3 already tetris
  std::vector<PlanarTree> a3{PlanarTree::corolla(jj), PlanarTree::unit(), PlanarTree::unit()};
  auto b3 = TreeBuilder::graft(a3, PlanarTree::corolla(labels::m(3)));
  CHECK(b3.canonical().second == 1);
}

TEST_CASE("element arithmetic") {
  Element e(c(2));
  e += Element(c(2), -1);
  CHECK(e.is_zero());
  Element f(c(2), 3);
  f *= mpq_class(1, 3);
  CHECK(f.coefficient(c(2)) == 1);
  CHECK_THROWS(f.add(c(3), 1));
}
