#include "doctest.h"
#include "huainf/homotopy.hpp"
#include "huainf/notation.hpp"

using namespace huainf;

namespace {
Element fb(std::initializer_list<int> parts) { return Element(fbar_generator(parts)); }
std::string s(const Element& x) { return format_element(x, true); }
}  // namespace

TEST_CASE("p, beta, h") {
  CHECK(s(map_p(fb({1}))) == "1F");
  CHECK(map_p(fb({2})).is_zero());
  CHECK(s(map_p(fb({1, 1}))) == "m(2)·1F");
  CHECK(s(map_beta(map_p(fb({1, 1})))) == "m(2)·f1");
  CHECK(s(map_h(fb({1, 1}))) == "f2");
  CHECK(map_h(fb({3})).is_zero());
  CHECK(map_h(fb({2, 3})).is_zero());
}

TEST_CASE("N closed form examples") {
  for (int n = 1; n <= 5; ++n) CHECK(map_N_closed(fb({n})).is_zero());
  CHECK(map_N_closed(fb({1, 1})).is_zero());
  CHECK(map_N_bruteforce(fb({1, 1})).is_zero());
  Element n3 = map_N_closed(fb({1, 1, 1}));
  CHECK(n3.size() == 2);
  CHECK(n3 == map_N_bruteforce(fb({1, 1, 1})));
  MESSAGE("(f1⊗f1⊗f1)m(3).N = " << s(n3));
}

TEST_CASE("homotopy lemma up to arity 6") {
  auto rep = verify_homotopy_lemma(6);
  for (const auto& w : rep.witnesses) MESSAGE(w);
  CHECK(rep.keys > 0);
  CHECK(rep.pass());
}
