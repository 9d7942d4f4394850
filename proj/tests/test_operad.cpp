#include "doctest.h"
#include "huainf/hu.hpp"
#include "huainf/notation.hpp"
#include "huainf/presentation.hpp"

using namespace huainf;

namespace {
std::string d_of(const Presentation& p, const char* expr) {
  return format_element(p.differential(parse_element(expr)), !p.is_operad());
}
}  // namespace

TEST_CASE("A-infinity anchors") {
  auto a = Presentation::a_infinity();
  CHECK(d_of(a, "m2") == "0");
  CHECK(d_of(a, "m3") == "(m2⊗1)m2 - (1⊗m2)m2");
  CHECK(a.generator_differential(labels::m(4)).size() == 5);
  for (int n = 2; n <= 8; ++n) CHECK(a.differential(a.generator_differential(labels::m(n))).is_zero());
}

TEST_CASE("hu anchors") {
  auto h = Presentation::a_hu();
  CHECK(d_of(h, "m1;0") == "1 - (1⊗i)m2");
  CHECK(d_of(h, "m0;1") == "1 - (i⊗1)m2");
  MESSAGE("m0;0;0 d = " << d_of(h, "m0;0;0"));
  CHECK(format_element(hu_expand(parse_element("m0;0;0"))) == "(j⊗j)m2");
  auto f = Presentation::f1_hu();
  CHECK(d_of(f, "v") == "i·ρ∅ - i·f1");
  CHECK(d_of(Presentation::f1(), "f1") == "0");
  CHECK(d_of(Presentation::f1(), "f2") == "m2·f1 - (f1⊗f1)m2");
}

#include <chrono>

#include "huainf/generators.hpp"

namespace {
void check_dsq(const Presentation& p, int bound) {
  for (Label g : generators(p, bound)) {
    Element d = p.generator_differential(g);
    Element dd = p.differential(d);
    INFO(p.name() << " " << label_info(g).name << " d = " << format_element(d, !p.is_operad()));
    INFO("dd = " << format_element(dd, !p.is_operad()));
    CHECK(dd.is_zero());
    for (const auto& [t, c] : d.terms()) CHECK(t.degree() == label_degree(g) + 1);
  }
}
}  // namespace

TEST_CASE("d squared") {
  auto t0 = std::chrono::steady_clock::now();
  check_dsq(Presentation::a_hu(), 7);
  auto t1 = std::chrono::steady_clock::now();
  check_dsq(Presentation::f1(), 7);
  auto t2 = std::chrono::steady_clock::now();
  check_dsq(Presentation::fbar1(), 7);
  check_dsq(Presentation::f1_hu(), 6);
  auto t3 = std::chrono::steady_clock::now();
  MESSAGE("hu " << std::chrono::duration<double>(t1 - t0).count() << "s f1 " << std::chrono::duration<double>(t2 - t1).count()
                << "s f1hu " << std::chrono::duration<double>(t3 - t2).count() << "s");
}
