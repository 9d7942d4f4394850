// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "huainf/enumerate.hpp"
#include "huainf/eval.hpp"
#include "huainf/generators.hpp"
#include "huainf/homotopy.hpp"
#include "huainf/label.hpp"
#include "huainf/notation.hpp"
#include "huainf/verify.hpp"

using namespace huainf;
using namespace huainf::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int run(int id, const char* name, double budget, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget) o.require(false, "over the " + std::to_string(static_cast<int>(budget)) + " s budget");
  std::printf("[%s] %d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

std::string d_of(const Presentation& p, const char* expr) {
  return format_element(p.differential(p.normalize(parse_element(expr))), !p.is_operad());
}

Outcome basis_counts() {
  Outcome o;
  const std::size_t expected[] = {1, 1, 3, 11, 45, 197};
  const Presentation a = Presentation::a_infinity();
  for (int n = 1; n <= 6; ++n) {
    const std::size_t engine = enumerate_basis(a, n).size();
    const std::size_t oracle = oracle_count(n);
    o.require(engine == expected[n - 1] && oracle == expected[n - 1],
              "n=" + std::to_string(n) + " engine " + std::to_string(engine) + " oracle " + std::to_string(oracle));
  }
  return o;
}

Outcome d_squared() {
  Outcome o;
  const std::pair<Presentation, int> items[] = {{Presentation::a_infinity(), 8},
                                                {Presentation::a_hu(), 7},
                                                {Presentation::f1(), 7},
                                                {Presentation::f1_hu(), 6}};
  std::size_t total = 0;
  for (const auto& [p, bound] : items)
    for (Label g : generators(p, bound)) {
      ++total;
      const Element dd = p.differential(p.generator_differential(g));
      o.require(dd.is_zero(), p.name() + " " + label_info(g).name + ": d d = " + format_element(dd, !p.is_operad()));
    }
  if (o.pass) o.detail = std::to_string(total) + " generators";
  return o;
}

Outcome anchors() {
  Outcome o;
  const Presentation hu = Presentation::a_hu();
  const Presentation fhu = Presentation::f1_hu();
  auto expect = [&](const Presentation& p, const char* x, const std::string& want) {
    const std::string got = d_of(p, x);
    o.require(got == want, std::string(x) + " d = " + got);
  };
  expect(hu, "m1;0", "1 - (1⊗i)m2");
  expect(hu, "m0;1", "1 - (i⊗1)m2");
  expect(fhu, "v", "i·ρ∅ - i·f1");
  expect(Presentation::f1(), "f1", "0");
  // Frozen convention: d at a tetris factor carries the degrees of the later
  // factors. The associator then has the (1,1) Koszul sign (-1)^(jp+q) = -1
  // on (1 (x) m2) m2.
  expect(Presentation::a_infinity(), "m3", "(m2⊗1)m2 - (1⊗m2)m2");
  return o;
}

Outcome homotopy_lemma() {
  Outcome o;
  const HomotopyReport r = verify_homotopy_lemma(6, 6);
  for (const auto& w : r.witnesses) o.require(false, w);
  o.require(r.pass(), std::to_string(r.failures) + " failures");
  if (o.pass) o.detail = std::to_string(r.keys) + " keys";
  return o;
}

Outcome from_suite(const std::string& suite, int arity) {
  Outcome o;
  SuiteOptions opt;
  opt.arity_max = arity;
  const Report r = run_suite(suite, opt);
  for (const auto& c : r.checks)
    if (!c.pass) o.require(false, c.id + " " + c.witness);
  if (o.pass) o.detail = std::to_string(r.checks.size()) + " checks";
  return o;
}

Outcome evaluator() {
  Outcome o;
  const Algebra a = unital_two_dim();
  o.require(check_ainf_algebra(a, 5).pass(), "ainf");
  o.require(check_hu_algebra(a, 6).pass(), "hu-algebra");
  const Report fk = check_fukaya_plus(a, 5);
  o.require(fk.checks.size() == 4 && fk.pass(), "fukaya (1)-(4)");
  // every single-entry mutation (tables of size <= 5 over the 2-dim basis)
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
        m.ops.try_emplace(key, n, k.degree()).first->second.add(t, b, 1, a.field);
        ++total;
        if (!caught(m)) {
          ++missed;
          o.require(false, std::string("missed mutation ") + key + " " + describe_entry(a, a, t, {{b, 1}}));
        }
      }
    }
  }
  // composition on random instances over Q and F_101
  int compositions = 0;
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    std::mt19937 rng(f.p + 11);
    for (int trial = 0; trial < 4; ++trial) {
      const Algebra x = trial % 2 == 0 ? unital_two_dim(f) : three_dim(f);
      const Morphism fm = random_morphism(x, x, 4, true, rng);
      const Algebra y = transport_structure(x, fm, 4);
      const Morphism gm = random_morphism(y, y, 4, true, rng);
      const Algebra z = transport_structure(y, gm, 4);
      o.require(check_ainf_morphism(fm, x, y, 4).pass() && check_ainf_morphism(gm, y, z, 4).pass(),
                "random morphisms invalid");
      o.require(check_ainf_morphism(compose_morphisms(fm, gm, x, y, z, 4), x, z, 4).pass(),
                "composite does not re-validate");
      const Morphism p = random_morphism(x, x, 4, false, rng);
      const Morphism q = random_morphism(x, x, 4, false, rng);
      const Morphism r = random_morphism(x, x, 4, false, rng);
      const Morphism pq_r = compose_morphisms(compose_morphisms(p, q, x, x, x, 4), r, x, x, x, 4);
      const Morphism p_qr = compose_morphisms(p, compose_morphisms(q, r, x, x, x, 4), x, x, x, 4);
      o.require(pq_r.components == p_qr.components, "composition not associative");
      const Morphism id = identity_morphism(x);
      o.require(compose_morphisms(id, p, x, x, x, 4).components == p.components &&
                    compose_morphisms(p, id, x, x, x, 4).components == p.components,
                "identity not a unit");
      ++compositions;
    }
  }
  if (o.pass)
    o.detail = std::to_string(total) + " mutations caught, " + std::to_string(compositions) + " random composition trials";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string first;
  for (int jobs : {1, 4, 4}) {
    SuiteOptions opt;
    opt.jobs = jobs;
    const Report r = run_suite("all", opt);
    const std::string text = report_json(r, "verify all", false) + report_table(r, false);
    o.require(r.pass(), "verify all has failures");
    if (first.empty()) first = text;
    else o.require(text == first, "output differs with --jobs " + std::to_string(jobs));
  }
  if (o.pass) o.detail = "3 runs identical (" + std::to_string(first.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "basis counts of A-infinity(n), n = 1..6, match the oracle", 5, basis_counts);
  failed += run(2, "d^2 = 0 on A-infinity (n<=8), A-infinity^hu (n+k<=7), F1 (n<=7), F1^hu (n+k<=6)", 120, d_squared);
  failed += run(3, "anchored differentials", 60, anchors);
  failed += run(4, "homotopy lemma on the F1-bar basis, arity <= 6", 60, homotopy_lemma);
  failed += run(5, "homology certification (A-infinity, F1 n<=5; hu windows n<=4)", 120,
                [] { return from_suite("homology", 5); });
  failed += run(6, "coalgebra: coassociative, counital, chain map; v and rho anchors", 120,
                [] { return from_suite("coalgebra", 6); });
  failed += run(7, "evaluator: unital instance, mutations, composition over Q and F_101", 120, evaluator);
  failed += run(8, "determinism of verify --suite all", 300, determinism);
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
