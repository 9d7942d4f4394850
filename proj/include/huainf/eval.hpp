#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "huainf/presentation.hpp"
#include "huainf/report.hpp"
#include "huainf/scalar.hpp"

namespace huainf {

// Sparse vector in a finite graded module: basis index -> coefficient.
using Vec = std::map<int, mpq_class>;

struct GradedBasis {
  std::vector<std::string> names;
  std::vector<int> degrees;

  std::size_t size() const { return names.size(); }
  int index(std::string_view name) const;  // -1 when absent
  int add(std::string name, int degree);
  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

// Multilinear map X^(x)n -> Y of a fixed degree, stored entrywise on basis
// tuples. Zero entries are never stored.
struct MultiMap {
  int arity = 0;
  int degree = 0;
  std::map<std::vector<int>, Vec> entries;

  MultiMap() = default;
  MultiMap(int arity, int degree) : arity(arity), degree(degree) {}
  void add(const std::vector<int>& in, int out, const mpq_class& c, Field f);
  void add(const std::vector<int>& in, const Vec& v, Field f, const mpq_class& scale = 1);
  Vec apply(const std::vector<int>& in) const;
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const MultiMap& a, const MultiMap& b) { return a.entries == b.entries; }
};

// Generator keys: m1, m2, m1;0, i, j, 1su for algebras; f1, f1;0, v for
// morphisms. Underscores are accepted and dropped ("m_1;0" == "m1;0").
struct SymbolKey {
  char kind = 'm';          // 'm', 'f', 'i', 'j', 'u' (1su), 'v'
  std::vector<int> parts;   // semicolon pattern for 'm' and 'f'
  int arity() const;
  int degree() const;
  std::string str() const;
};
std::optional<SymbolKey> parse_key(std::string_view text);
std::string canonical_key(std::string_view text);  // throws std::invalid_argument
std::string label_key(Label l);

struct Algebra {
  Field field;
  GradedBasis basis;
  std::map<std::string, MultiMap> ops;  // by canonical key; missing means zero

  const MultiMap* op(const std::string& key) const;
  MultiMap op_or_zero(const std::string& key) const;
  int degree_of(int b) const { return basis.degrees[static_cast<std::size_t>(b)]; }
};

struct Morphism {
  std::map<std::string, MultiMap> components;  // f1, f2, f1;0, v, ...
  const MultiMap* component(const std::string& key) const;
};

// Table entries must reference existing basis elements and respect degrees.
std::vector<std::string> validate(const Algebra& a);
std::vector<std::string> validate(const Morphism& f, const Algebra& src, const Algebra& tgt);

// Algebras A_0, ..., A_L and morphisms A_(l-1) -> A_l for the floors at
// level l. Operad elements use L == 0.
struct EvalContext {
  std::vector<const Algebra*> algebras;
  std::vector<const Morphism*> morphisms;
};

// The multilinear map A_0^(x)n -> A_L of a symbolic element. A tree reads
// as the composite (x_1 (x) ... (x) x_k) L of its notation, evaluated with
// the Koszul rule (a (x) b)(f (x) g) = (-1)^(|b||f|) af (x) bg. Missing
// tables count as zero, except the nullary i, j, 1su and v which must exist.
MultiMap evaluate(const Element& x, const EvalContext& ctx);
// Differential of the mapping complex: phi m1 - (-1)^|phi| sum (1..m1..1) phi.
MultiMap boundary(const MultiMap& phi, const Algebra& src, const Algebra& tgt);

MultiMap identity_map(const Algebra& a);
MultiMap add_maps(const MultiMap& a, const MultiMap& b, Field f, const mpq_class& scale_b = 1);
std::string describe_entry(const Algebra& src, const Algebra& tgt, const std::vector<int>& in, const Vec& out);
// First differing entry of two maps, empty when equal.
std::string first_difference(const MultiMap& a, const MultiMap& b, const Algebra& src, const Algebra& tgt, Field f);

// Stasheff relations sum (-1)^(jp+q) (1^j (x) m_p (x) 1^q) m_(j+1+q) = 0 for
// n = 1..n_max, evaluated explicitly (independent of the symbolic engine).
Report check_ainf_algebra(const Algebra& a, int n_max);
// evaluate(x d) == boundary(evaluate(x)) for every generator x of the
// operad with size bound (n for m_n, n + k for m_{n1;...;nk}).
Report check_operad_relations(const Algebra& a, const Presentation& operad, int bound, const std::string& prefix);
Report check_hu_algebra(const Algebra& a, int bound);

// Fukaya's A+ = A + k 1su + k j with the strictly unital extension of A's
// tables: (..j..) m+ is the matching m_{n1;...;nk}, j m1+ = 1su - i.
Algebra fukaya_plus(const Algebra& a, int n_max);
// Conditions (1)-(4) of Fukaya's definition, reported separately.
Report check_fukaya_plus(const Algebra& a, int n_max);

// A-infinity morphism relations f_n d == boundary(f_n), n <= n_max.
Report check_ainf_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int n_max);
// F_1^hu relations for generators with n + k <= bound, v m1 = i^B - i^A f1,
// and conditions (1)-(4) for the induced f+ : A+ -> B+.
Report check_hu_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int bound);
Morphism fukaya_plus_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int n_max);

// Convolution g.h through the comultiplication: components f_n (n <= n_max)
// for A-infinity morphisms, the F_1^hu generators with n + k <= n_max when
// `hu` is set.
Morphism compose_morphisms(const Morphism& g, const Morphism& h, const Algebra& a, const Algebra& b,
                           const Algebra& c, int n_max, bool hu = false);
Morphism identity_morphism(const Algebra& b, bool hu = false);

// Unitality: (1 (x) i) m2 ~ 1 ~ (i (x) 1) m2 as chain maps, decided exactly.
Report check_unitality(const Algebra& a);
// i^A f1 - i^B is a boundary in B.
Report check_unital_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt);

// Transports the A-infinity structure of `a` along f with f_1 = id and the
// given higher components: returns a' such that f : a -> a' is an
// A-infinity morphism. Components beyond n_max are ignored.
Algebra transport_structure(const Algebra& a, const Morphism& f, int n_max);

}  // namespace huainf
