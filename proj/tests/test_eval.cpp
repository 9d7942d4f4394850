#include "doctest.h"
#include "fixtures.hpp"
#include "huainf/eval.hpp"
#include "huainf/notation.hpp"

using namespace huainf;
using namespace huainf::fixtures;

TEST_CASE("keys") {
  CHECK(canonical_key("m_1;0") == "m1;0");
  CHECK(canonical_key("f_0;0") == "v");
  CHECK(parse_key("m1;0")->degree() == -1);
  CHECK(parse_key("f1;0")->degree() == -2);
  CHECK(parse_key("m0;1")->arity() == 1);
  CHECK_FALSE(parse_key("m0;0"));
  CHECK_FALSE(parse_key("q3"));
}

TEST_CASE("evaluation of operad elements") {
  const Algebra a = unital_two_dim();
  EvalContext ctx{{&a}, {}};
  CHECK(evaluate(Element(PlanarTree::corolla(labels::m(2))), ctx) == a.ops.at("m2"));
  CHECK(evaluate(parse_element("(m2⊗1)m2 - (1⊗m2)m2"), ctx).is_zero());
  CHECK(evaluate(parse_element("1 - (1⊗i)m2"), ctx).is_zero());
  CHECK(evaluate(parse_element("1"), ctx) == identity_map(a));
}

TEST_CASE("strictly unital two-dimensional algebra") {
  const Algebra a = unital_two_dim();
  CHECK(validate(a).empty());
  CHECK(check_ainf_algebra(a, 5).pass());
  CHECK(check_operad_relations(a, Presentation::a_infinity(), 6, "ainf").pass());
  CHECK(check_hu_algebra(a, 6).pass());
  const Report fk = check_fukaya_plus(a, 5);
  CHECK(fk.checks.size() == 4);
  CHECK(fk.pass());
  CHECK(check_unitality(a).pass());
  CHECK(check_hu_morphism(identity_morphism(a, true), a, a, 5).pass());
  CHECK(check_unital_morphism(identity_morphism(a), a, a).pass());
  Morphism twice = identity_morphism(a);
  twice.components["f1"] = add_maps(identity_map(a), identity_map(a), a.field);
  CHECK_FALSE(check_unital_morphism(twice, a, a).pass());
}

TEST_CASE("every single-entry mutation is caught") {
  const Algebra a = unital_two_dim();
  int total = 0, missed = 0;
  for (const char* key : {"m1", "m2", "m3", "m4", "i", "m1;0", "m0;1", "m2;0", "m1;1", "m0;2", "m0;0;0", "m3;0",
                          "m2;1", "m1;2", "m0;3", "m1;0;0", "m0;1;0", "m0;0;1"}) {
    const SymbolKey k = *parse_key(key);
    const int n = k.arity();
    for (int code = 0; code < (1 << n); ++code) {
      std::vector<int> t(static_cast<std::size_t>(n));
      int d = 0;
      for (int q = 0; q < n; ++q) d += a.degree_of(t[static_cast<std::size_t>(q)] = code >> q & 1);
      for (int b = 0; b < 2; ++b) {
        if (a.degree_of(b) - d != k.degree()) continue;
        Algebra m = a;
        MultiMap& tb = m.ops.try_emplace(key, n, k.degree()).first->second;
        tb.add(t, b, 1, a.field);
        ++total;
        if (!caught(m)) {
          ++missed;
          MESSAGE("missed " << key << " " << describe_entry(a, a, t, {{b, 1}}));
        }
      }
    }
  }
  CHECK(total == 30);
  CHECK(missed == 0);
}

TEST_CASE("homotopy unit mutation on an acyclic algebra") {
  Algebra a;
  const Field f = Field::rationals();
  a.field = f;
  a.basis.add("1", 0);
  a.basis.add("e", -1);
  MultiMap m1(1, 1), m2(2, 0), i(0, 0), h(1, -1);
  m1.add({1}, 0, 1, f);
  m2.add({0, 0}, 0, 1, f);
  m2.add({0, 1}, 1, 1, f);
  m2.add({1, 0}, 1, 1, f);
  i.add({}, 0, 1, f);
  a.ops = {{"m1", m1}, {"m2", m2}, {"i", i}};
  CHECK(check_hu_algebra(a, 5).pass());
  h.add({0}, 1, 1, f);
  a.ops["m1;0"] = h;
  const Report r = check_hu_algebra(a, 5);
  CHECK_FALSE(r.pass());
  bool found = false;
  for (const auto& c : r.checks) found = found || (c.id == "hu-algebra/m1;0" && !c.pass);
  CHECK(found);
}

TEST_CASE("transported structures and morphism composition") {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    std::mt19937 rng(f.p + 7);
    for (int trial = 0; trial < 3; ++trial) {
      const Algebra a = trial == 0 ? unital_two_dim(f) : three_dim(f);
      // f : a -> b and g : b -> c with random higher components
      const Morphism fm = random_morphism(a, a, 4, true, rng);
      const Algebra b = transport_structure(a, fm, 4);
      const Morphism gm = random_morphism(b, b, 4, true, rng);
      const Algebra c = transport_structure(b, gm, 4);
      CHECK(check_ainf_algebra(b, 4).pass());
      CHECK(check_operad_relations(c, Presentation::a_infinity(), 4, "ainf").pass());
      CHECK(check_ainf_algebra(c, 4).pass());
      CHECK(check_ainf_morphism(fm, a, b, 4).pass());
      CHECK(check_ainf_morphism(gm, b, c, 4).pass());
      const Morphism fg = compose_morphisms(fm, gm, a, b, c, 4);
      CHECK(check_ainf_morphism(fg, a, c, 4).pass());
      // (g.h)_2 = (g1 (x) g1) h2 + g2 h1 with identity first components
      CHECK(fg.components.at("f2") == add_maps(fm.components.at("f2"), gm.components.at("f2"), f));
      // associativity and units on arbitrary (not necessarily valid) data
      const Morphism x = random_morphism(a, a, 4, false, rng);
      const Morphism y = random_morphism(a, a, 4, false, rng);
      const Morphism z = random_morphism(a, a, 4, false, rng);
      const Morphism xy_z = compose_morphisms(compose_morphisms(x, y, a, a, a, 4), z, a, a, a, 4);
      const Morphism x_yz = compose_morphisms(x, compose_morphisms(y, z, a, a, a, 4), a, a, a, 4);
      CHECK(xy_z.components == x_yz.components);
      const Morphism id = identity_morphism(a);
      CHECK(compose_morphisms(id, x, a, a, a, 4).components == x.components);
      CHECK(compose_morphisms(x, id, a, a, a, 4).components == x.components);
    }
  }
}

TEST_CASE("a broken morphism relation is reported") {
  const Algebra a = unital_two_dim();
  std::mt19937 rng(3);
  Morphism fm = random_morphism(a, a, 3, true, rng);
  const Algebra b = transport_structure(a, fm, 3);
  CHECK(check_ainf_morphism(fm, a, b, 3).pass());
  fm.components["f1"].add({0}, 0, 1, a.field);  // f1(1) = 2
  const Report r = check_ainf_morphism(fm, a, b, 3);
  CHECK_FALSE(r.pass());
  CHECK(r.checks[1].id == "ainf-morphism/f2");
  CHECK_FALSE(r.checks[1].pass);
  MESSAGE(r.checks[1].witness);
}
