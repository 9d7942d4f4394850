#include "doctest.h"
#include "huainf/coalgebra.hpp"
#include "huainf/enumerate.hpp"
#include "huainf/notation.hpp"

using namespace huainf;

namespace {
std::string s(const Element& x) { return format_element(x, true); }
Element gen(Label l) { return Element(PlanarTree::corolla(l)); }
}  // namespace

TEST_CASE("delta and counit anchors") {
  const auto f1 = Presentation::f1();
  CHECK(s(delta(f1, gen(labels::f(1)))) == "f1·f1'");
  MESSAGE("f2 delta = " << s(delta(f1, gen(labels::f(2)))));
  CHECK(delta(f1, gen(labels::f(2))).size() == 2);
  CHECK(delta(f1, gen(labels::f(4))).size() == 8);
  CHECK(s(counit(f1, gen(labels::f(1)))) == "1");
  CHECK(counit(f1, gen(labels::f(3))).is_zero());
  const auto hu = Presentation::f1_hu();
  const Element vd = delta(hu, gen(labels::v()));
  MESSAGE("v delta = " << s(vd));
  Element expect = Presentation::f1_hu(2).normalize(parse_element("v·f1' + v'"));
  CHECK(vd == expect);
  const Element irho(PlanarTree::corolla(labels::i()));
  CHECK(delta(hu, irho) == irho);
  MESSAGE("f1;0 delta = " << s(delta(hu, gen(labels::f_hu({1, 0})))));
}

TEST_CASE("coalgebra identities") {
  for (auto [p, bound] : {std::pair{Presentation::f1(), 6}, std::pair{Presentation::f1_su(), 5},
                          std::pair{Presentation::f1_hu(), 5}}) {
    auto rep = verify_coalgebra(p, coalgebra_keys(p, bound));
    for (const auto& w : rep.witnesses) MESSAGE(p.name() << ": " << w);
    CHECK(rep.keys > 0);
    CHECK(rep.pass());
  }
}

TEST_CASE("coalgebra identities on composite trees") {
  for (int n = 0; n <= 3; ++n) {
    const auto p = Presentation::f1();
    if (n > 0) CHECK(verify_coalgebra(p, enumerate_basis(p, n)).pass());
    const auto hu = Presentation::f1_hu();
    if (n <= 2) {
      auto rep = verify_coalgebra(hu, enumerate_basis(hu, n, 1));
      for (const auto& w : rep.witnesses) MESSAGE(w);
      CHECK(rep.pass());
    }
  }
}
