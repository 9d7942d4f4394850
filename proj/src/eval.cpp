#include "huainf/eval.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "huainf/coalgebra.hpp"
#include "huainf/generators.hpp"
#include "huainf/koszul.hpp"
#include "huainf/linalg.hpp"
#include "huainf/notation.hpp"

namespace huainf {
namespace {

mpq_class reduce(Field f, const mpq_class& q) { return f.is_rational() ? q : Scalar(f, q).value(); }

void vec_add(Vec& v, int k, const mpq_class& c, Field f) {
  if (c == 0) return;
  mpq_class& slot = v[k];
  slot = reduce(f, slot + c);
  if (slot == 0) v.erase(k);
}

void vec_add(Vec& v, const Vec& w, const mpq_class& c, Field f) {
  for (const auto& [k, x] : w) vec_add(v, k, x * c, f);
}

template <class Fn>
void for_each_tuple(std::size_t dim, int n, Fn&& fn) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  if (n > 0 && dim == 0) return;
  while (true) {
    fn(t);
    int q = n - 1;
    while (q >= 0 && ++t[static_cast<std::size_t>(q)] == static_cast<int>(dim)) t[static_cast<std::size_t>(q--)] = 0;
    if (q < 0) return;
  }
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t q = 0; q < parts.size(); ++q) s += (q ? ";" : "") + std::to_string(parts[q]);
  return s;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Splits a tuple over A+ (basis of A, then 1su, then j) at the j positions.
struct JSplit {
  std::vector<int> parts{0};
  std::vector<int> rest;
  int sign = 1;
};

JSplit split_at_j(const std::vector<int>& t, int j, const std::function<int(int)>& degree) {
  JSplit s;
  int later = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (*it == j) s.sign *= parity_sign(later);  // j (degree -1) passes the later arguments
    else later += degree(*it);
  }
  for (int x : t) {
    if (x == j) s.parts.push_back(0);
    else {
      ++s.parts.back();
      s.rest.push_back(x);
    }
  }
  return s;
}

Vec nullary_value(const MultiMap* m) {
  if (!m) return {};
  auto it = m->entries.find({});
  return it == m->entries.end() ? Vec{} : it->second;
}

}  // namespace

int GradedBasis::index(std::string_view name) const {
  for (std::size_t q = 0; q < names.size(); ++q)
    if (names[q] == name) return static_cast<int>(q);
  return -1;
}

int GradedBasis::add(std::string name, int degree) {
  if (index(name) >= 0) throw std::invalid_argument("duplicate basis element " + name);
  names.push_back(std::move(name));
  degrees.push_back(degree);
  return static_cast<int>(names.size()) - 1;
}

void MultiMap::add(const std::vector<int>& in, int out, const mpq_class& c, Field f) {
  if (c == 0) return;
  Vec& v = entries[in];
  vec_add(v, out, c, f);
  if (v.empty()) entries.erase(in);
}

void MultiMap::add(const std::vector<int>& in, const Vec& w, Field f, const mpq_class& scale) {
  if (w.empty() || scale == 0) return;
  Vec& v = entries[in];
  vec_add(v, w, scale, f);
  if (v.empty()) entries.erase(in);
}

Vec MultiMap::apply(const std::vector<int>& in) const {
  auto it = entries.find(in);
  return it == entries.end() ? Vec{} : it->second;
}

int SymbolKey::arity() const { return (kind == 'm' || kind == 'f') ? sum(parts) : 0; }

int SymbolKey::degree() const {
  const int n = sum(parts);
  const int k = static_cast<int>(parts.size());
  switch (kind) {
    case 'm': return k == 1 ? 2 - n : 4 - n - 2 * k;
    case 'f': return k == 1 ? 1 - n : 3 - n - 2 * k;
    case 'j': case 'v': return -1;
    default: return 0;
  }
}

std::string SymbolKey::str() const {
  switch (kind) {
    case 'i': return "i";
    case 'j': return "j";
    case 'u': return "1su";
    case 'v': return "v";
    default: return std::string(1, kind) + join_parts(parts);
  }
}

std::optional<SymbolKey> parse_key(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '_') s += c;
  SymbolKey k;
  if (s == "i" || s == "j" || s == "v") {
    k.kind = s[0];
    return k;
  }
  if (s == "1su") {
    k.kind = 'u';
    return k;
  }
  if (s.size() < 2 || (s[0] != 'm' && s[0] != 'f')) return std::nullopt;
  k.kind = s[0];
  std::string cur;
  for (std::size_t q = 1; q <= s.size(); ++q) {
    if (q == s.size() || s[q] == ';') {
      if (cur.empty() || cur.size() > 3) return std::nullopt;
      k.parts.push_back(std::stoi(cur));
      cur.clear();
    } else if (s[q] >= '0' && s[q] <= '9') {
      cur += s[q];
    } else {
      return std::nullopt;
    }
  }
  const int n = sum(k.parts);
  if (k.parts.size() == 1) {
    if (n < 1) return std::nullopt;
  } else {
    if (k.kind == 'f' && k.parts == std::vector<int>{0, 0}) {
      k.kind = 'v';
      k.parts.clear();
      return k;
    }
    if (n + static_cast<int>(k.parts.size()) < (k.kind == 'm' ? 3 : 2)) return std::nullopt;
  }
  return k;
}

std::string canonical_key(std::string_view text) {
  auto k = parse_key(text);
  if (!k) throw std::invalid_argument("unknown generator key '" + std::string(text) + "'");
  return k->str();
}

std::string label_key(Label l) {
  const LabelInfo& li = label_info(l);
  switch (li.family) {
    case Family::M: case Family::MHu: return "m" + join_parts(li.parts);
    case Family::F: case Family::FHu: return "f" + join_parts(li.parts);
    case Family::I: return "i";
    case Family::J: return "j";
    case Family::StrictUnit: return "1su";
    case Family::V: return "v";
    default: throw std::invalid_argument("no evaluation for label " + li.name);
  }
}

const MultiMap* Algebra::op(const std::string& key) const {
  auto it = ops.find(key);
  return it == ops.end() ? nullptr : &it->second;
}

MultiMap Algebra::op_or_zero(const std::string& key) const {
  if (const MultiMap* m = op(key)) return *m;
  auto k = parse_key(key);
  return k ? MultiMap(k->arity(), k->degree()) : MultiMap();
}

const MultiMap* Morphism::component(const std::string& key) const {
  auto it = components.find(key);
  return it == components.end() ? nullptr : &it->second;
}

namespace {

void validate_table(const std::string& key, const MultiMap& m, const Algebra& src, const Algebra& tgt,
                    std::vector<std::string>& errors) {
  auto k = parse_key(key);
  if (!k) {
    errors.push_back("unknown key " + key);
    return;
  }
  if (m.arity != k->arity() || m.degree != k->degree()) {
    errors.push_back(key + ": arity/degree bookkeeping mismatch");
    return;
  }
  for (const auto& [in, out] : m.entries) {
    if (static_cast<int>(in.size()) != m.arity) errors.push_back(key + ": entry with wrong number of inputs");
    int d = 0;
    bool ok = true;
    for (int x : in) {
      if (x < 0 || x >= static_cast<int>(src.basis.size())) ok = false;
      else d += src.degree_of(x);
    }
    if (!ok) {
      errors.push_back(key + ": input out of range");
      continue;
    }
    for (const auto& [b, c] : out) {
      if (b < 0 || b >= static_cast<int>(tgt.basis.size())) {
        errors.push_back(key + ": output out of range");
      } else if (tgt.degree_of(b) - d != m.degree) {
        errors.push_back(key + ": degree mismatch at " + describe_entry(src, tgt, in, {{b, c}}));
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate(const Algebra& a) {
  std::vector<std::string> errors;
  if (a.basis.names.size() != a.basis.degrees.size()) errors.push_back("basis names/degrees differ in length");
  for (const auto& [key, m] : a.ops) {
    auto k = parse_key(key);
    if (k && (k->kind == 'f' || k->kind == 'v')) errors.push_back(key + ": morphism component in an algebra");
    validate_table(key, m, a, a, errors);
  }
  return errors;
}

std::vector<std::string> validate(const Morphism& f, const Algebra& src, const Algebra& tgt) {
  std::vector<std::string> errors;
  if (!(src.field == tgt.field)) errors.push_back("source and target rings differ");
  for (const auto& [key, m] : f.components) {
    auto k = parse_key(key);
    if (k && k->kind != 'f' && k->kind != 'v') errors.push_back(key + ": not a morphism component");
    validate_table(key, m, src, tgt, errors);
  }
  return errors;
}

std::string describe_entry(const Algebra& src, const Algebra& tgt, const std::vector<int>& in, const Vec& out) {
  std::ostringstream s;
  s << "(";
  for (std::size_t q = 0; q < in.size(); ++q) s << (q ? "," : "") << src.basis.names[static_cast<std::size_t>(in[q])];
  s << ") -> ";
  if (out.empty()) s << "0";
  bool first = true;
  for (const auto& [b, c] : out) {
    if (!first) s << " + ";
    first = false;
    s << c.get_str() << "*" << tgt.basis.names[static_cast<std::size_t>(b)];
  }
  return s.str();
}

MultiMap add_maps(const MultiMap& a, const MultiMap& b, Field f, const mpq_class& scale_b) {
  MultiMap out = a;
  for (const auto& [in, v] : b.entries) out.add(in, v, f, scale_b);
  return out;
}

std::string first_difference(const MultiMap& a, const MultiMap& b, const Algebra& src, const Algebra& tgt, Field f) {
  MultiMap d = add_maps(a, b, f, -1);
  if (d.is_zero()) return {};
  const auto& [in, v] = *d.entries.begin();
  return "residual " + describe_entry(src, tgt, in, v);
}

MultiMap identity_map(const Algebra& a) {
  MultiMap m(1, 0);
  for (std::size_t b = 0; b < a.basis.size(); ++b) m.add({static_cast<int>(b)}, static_cast<int>(b), 1, a.field);
  return m;
}

MultiMap evaluate(const Element& x, const EvalContext& ctx) {
  if (ctx.algebras.empty()) throw std::invalid_argument("evaluate: no algebras");
  const Algebra& src = *ctx.algebras.front();
  const Field field = src.field;
  const int top = static_cast<int>(ctx.algebras.size()) - 1;
  MultiMap out(x.arity(), x.degree());
  for (const auto& [t, c] : x.terms()) {
    TreeShape s(t);
    const std::size_t nv = s.size();
    std::vector<int> n_in(nv, 0), deg(nv, 0), index(nv, top);
    std::vector<const MultiMap*> table(nv, nullptr);
    for (std::size_t v = nv; v-- > 0;) {
      const Label l = s.label[v];
      if (l == kInput) {
        n_in[v] = 1;
        continue;
      }
      deg[v] = label_degree(l);
      for (int ch : s.children[v]) {
        n_in[v] += n_in[static_cast<std::size_t>(ch)];
        deg[v] += deg[static_cast<std::size_t>(ch)];
      }
    }
    for (std::size_t v = 0; v < nv; ++v) {
      const Label l = s.label[v];
      if (l == kInput) {
        if (index[v] != 0) throw std::invalid_argument("evaluate: input not below all floors");
        continue;
      }
      const LabelInfo& li = label_info(l);
      const std::string key = label_key(l);
      int child_index = index[v];
      if (li.on_floor()) {
        if (li.level != index[v] || li.level > static_cast<int>(ctx.morphisms.size()))
          throw std::invalid_argument("evaluate: floor level does not match the context");
        table[v] = ctx.morphisms[static_cast<std::size_t>(li.level - 1)]->component(key);
        child_index = li.level - 1;
      } else {
        table[v] = ctx.algebras[static_cast<std::size_t>(index[v])]->op(key);
      }
      if (!table[v] && (li.family == Family::I || li.family == Family::J || li.family == Family::StrictUnit ||
                        li.family == Family::V))
        throw std::invalid_argument("missing structure constant " + key);
      for (int ch : s.children[v]) index[static_cast<std::size_t>(ch)] = child_index;
    }
    const mpq_class coef = c * notation_sign(t);
    for_each_tuple(src.basis.size(), x.arity(), [&](const std::vector<int>& tuple) {
      std::vector<int> later(tuple.size() + 1, 0);  // later[r] = sum of degrees of inputs r..end
      for (std::size_t r = tuple.size(); r-- > 0;) later[r] = later[r + 1] + src.degree_of(tuple[r]);
      std::function<Vec(int, int)> ev = [&](int v, int off) -> Vec {
        const std::size_t vv = static_cast<std::size_t>(v);
        if (s.label[vv] == kInput) return Vec{{tuple[static_cast<std::size_t>(off)], 1}};
        if (!table[vv]) return {};
        const auto& kids = s.children[vv];
        std::vector<Vec> vals;
        int e = 0;
        int o = off;
        for (int ch : kids) {
          const std::size_t cc = static_cast<std::size_t>(ch);
          const int end = o + n_in[cc];
          e += deg[cc] * later[static_cast<std::size_t>(end)];
          vals.push_back(ev(ch, o));
          if (vals.back().empty()) return {};
          o = end;
        }
        Vec res;
        std::vector<int> b(kids.size());
        std::function<void(std::size_t, mpq_class)> rec = [&](std::size_t q, mpq_class k) {
          if (q == kids.size()) {
            vec_add(res, table[vv]->apply(b), k, field);
            return;
          }
          for (const auto& [bi, ci] : vals[q]) {
            b[q] = bi;
            rec(q + 1, k * ci);
          }
        };
        rec(0, parity_sign(e));
        return res;
      };
      out.add(tuple, ev(0, 0), field, coef);
    });
  }
  return out;
}

MultiMap boundary(const MultiMap& phi, const Algebra& src, const Algebra& tgt) {
  const Field f = src.field;
  MultiMap out(phi.arity, phi.degree + 1);
  if (const MultiMap* m1 = tgt.op("m1"))
    for (const auto& [in, v] : phi.entries)
      for (const auto& [b, c] : v) out.add(in, m1->apply({b}), f, c);
  const MultiMap* m1s = src.op("m1");
  if (!m1s || phi.arity == 0) return out;
  const int outer = -parity_sign(phi.degree);
  for_each_tuple(src.basis.size(), phi.arity, [&](const std::vector<int>& a) {
    int later = 0;
    for (std::size_t q = a.size(); q-- > 0;) {
      const Vec img = m1s->apply({a[q]});
      std::vector<int> b = a;
      for (const auto& [x, c] : img) {
        b[q] = x;
        out.add(a, phi.apply(b), f, c * outer * parity_sign(later));
      }
      later += src.degree_of(a[q]);
    }
  });
  return out;
}

Report check_ainf_algebra(const Algebra& a, int n_max) {
  Report rep;
  const Field f = a.field;
  for (int n = 1; n <= n_max; ++n) {
    Timer timer;
    std::string witness;
    for_each_tuple(a.basis.size(), n, [&](const std::vector<int>& t) {
      if (!witness.empty()) return;
      Vec res;
      for (int p = 1; p <= n; ++p) {
        const MultiMap* mp = a.op("m" + std::to_string(p));
        if (!mp) continue;
        for (int j = 0; j + p <= n; ++j) {
          const int q = n - j - p;
          const MultiMap* outer = a.op("m" + std::to_string(j + 1 + q));
          if (!outer) continue;
          int later = 0;
          for (int r = j + p; r < n; ++r) later += a.degree_of(t[static_cast<std::size_t>(r)]);
          const int sign = parity_sign(j * p + q) * parity_sign(static_cast<long>(mp->degree) * later);
          const Vec inner = mp->apply(std::vector<int>(t.begin() + j, t.begin() + j + p));
          std::vector<int> args(t.begin(), t.begin() + j);
          args.push_back(0);
          args.insert(args.end(), t.begin() + j + p, t.end());
          for (const auto& [b, c] : inner) {
            args[static_cast<std::size_t>(j)] = b;
            vec_add(res, outer->apply(args), c * sign, f);
          }
        }
      }
      if (!res.empty()) witness = "relation " + std::to_string(n) + " at " + describe_entry(a, a, t, res);
    });
    rep.add("ainf-algebra/n=" + std::to_string(n), witness.empty(), witness, timer.seconds());
  }
  return rep;
}

Report check_operad_relations(const Algebra& a, const Presentation& operad, int bound, const std::string& prefix) {
  Report rep;
  EvalContext ctx{{&a}, {}};
  for (Label l : generators(operad, bound)) {
    Timer timer;
    const Element x(PlanarTree::corolla(l));
    const MultiMap lhs = evaluate(operad.differential(x), ctx);
    const MultiMap rhs = boundary(evaluate(x, ctx), a, a);
    const std::string diff = first_difference(lhs, rhs, a, a, a.field);
    rep.add(prefix + "/" + label_key(l), diff.empty(), diff.empty() ? "" : label_key(l) + " d: " + diff,
            timer.seconds());
  }
  return rep;
}

Report check_hu_algebra(const Algebra& a, int bound) {
  if (!a.op("i")) throw std::invalid_argument("hu-algebra check needs the homotopy unit i");
  return check_operad_relations(a, Presentation::a_hu(), bound, "hu-algebra");
}

Algebra fukaya_plus(const Algebra& a, int n_max) {
  Algebra p;
  p.field = a.field;
  p.basis = a.basis;
  const int u = p.basis.add("1su", 0);
  const int j = p.basis.add("j", -1);
  const Vec i_vec = nullary_value(a.op("i"));
  auto degree = [&](int x) { return p.degree_of(x); };
  for (int n = 1; n <= n_max; ++n) {
    MultiMap m(n, 2 - n);
    for_each_tuple(p.basis.size(), n, [&](const std::vector<int>& t) {
      int units = 0;
      for (int x : t) units += x == u;
      if (units) {
        if (n == 2) m.add(t, t[0] == u ? t[1] : t[0], 1, a.field);
        return;
      }
      const JSplit s = split_at_j(t, j, degree);
      if (s.parts.size() == 1) {
        m.add(t, a.op_or_zero("m" + std::to_string(n)).apply(t), a.field);
      } else if (n == 1) {
        m.add(t, u, 1, a.field);  // j m1+ = 1su - i
        m.add(t, i_vec, a.field, -1);
      } else {
        const MultiMap* hu = a.op("m" + join_parts(s.parts));
        if (hu) m.add(t, hu->apply(s.rest), a.field, s.sign);
      }
    });
    p.ops["m" + std::to_string(n)] = std::move(m);
  }
  if (const MultiMap* i = a.op("i")) p.ops["i"] = *i;
  MultiMap unit(0, 0), jj(0, -1);
  unit.add({}, u, 1, a.field);
  jj.add({}, j, 1, a.field);
  p.ops["1su"] = unit;
  p.ops["j"] = jj;
  return p;
}

Report check_fukaya_plus(const Algebra& a, int n_max) {
  if (!a.op("i")) throw std::invalid_argument("Fukaya's A+ needs the homotopy unit i");
  Report rep;
  Timer timer;
  const Algebra p = fukaya_plus(a, n_max);
  const int u = p.basis.index("1su"), j = p.basis.index("j");
  const int dim = static_cast<int>(a.basis.size());
  Report ainf = check_ainf_algebra(p, n_max);
  std::string w1;
  for (const auto& c : ainf.checks)
    if (!c.pass && w1.empty()) w1 = "A+ " + c.id + ": " + c.witness;
  for (int n = 1; n <= n_max && w1.empty(); ++n) {
    const MultiMap& m = p.ops.at("m" + std::to_string(n));
    for_each_tuple(p.basis.size(), n, [&](const std::vector<int>& t) {
      bool has_u = false;
      for (int x : t) has_u = has_u || x == u;
      if (!has_u || !w1.empty()) return;
      Vec expect;
      if (n == 2) expect = {{t[0] == u ? t[1] : t[0], 1}};
      if (m.apply(t) != expect) w1 = "1su is not a strict unit at m" + std::to_string(n) + describe_entry(p, p, t, m.apply(t));
    });
  }
  rep.add("fukaya/(1) A+ strictly unital A-infinity", w1.empty(), w1, timer.seconds());
  // (2) i = 1su - j m1+ lies in A and is the homotopy unit of A
  Vec i_plus{{u, 1}};
  vec_add(i_plus, p.ops.at("m1").apply({j}), -1, a.field);
  std::string w2;
  for (const auto& [b, c] : i_plus)
    if (b >= dim) w2 = "1su - j m1+ has a component on " + p.basis.names[static_cast<std::size_t>(b)];
  if (w2.empty() && i_plus != nullary_value(a.op("i"))) w2 = "1su - j m1+ differs from i";
  rep.add("fukaya/(2) i = 1su - j m1+ in A", w2.empty(), w2);
  // (3) m+ restricted to A is m; (4) (A + kj)^n m+_n lands in A for n > 1
  std::string w3, w4;
  for (int n = 1; n <= n_max; ++n) {
    const MultiMap& m = p.ops.at("m" + std::to_string(n));
    const MultiMap orig = a.op_or_zero("m" + std::to_string(n));
    for_each_tuple(p.basis.size(), n, [&](const std::vector<int>& t) {
      bool in_a = true, has_u = false;
      for (int x : t) {
        in_a = in_a && x < dim;
        has_u = has_u || x == u;
      }
      const Vec v = m.apply(t);
      if (in_a && w3.empty() && v != orig.apply(t)) w3 = "m" + std::to_string(n) + "+ differs from m on " + describe_entry(p, p, t, v);
      if (!has_u && n > 1 && w4.empty())
        for (const auto& [b, c] : v)
          if (b >= dim) w4 = "m" + std::to_string(n) + "+ leaves A on " + describe_entry(p, p, t, v);
    });
  }
  rep.add("fukaya/(3) A -> A+ strict", w3.empty(), w3);
  rep.add("fukaya/(4) (A+kj)^n m+ in A", w4.empty(), w4);
  return rep;
}

Report check_ainf_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int n_max) {
  Report rep;
  const Presentation p = Presentation::f1();
  EvalContext ctx{{&src, &tgt}, {&f}};
  for (int n = 1; n <= n_max; ++n) {
    Timer timer;
    const Element x(PlanarTree::corolla(labels::f(n)));
    const MultiMap lhs = evaluate(p.differential(x), ctx);
    const MultiMap rhs = boundary(evaluate(x, ctx), src, tgt);
    const std::string diff = first_difference(lhs, rhs, src, tgt, src.field);
    rep.add("ainf-morphism/f" + std::to_string(n), diff.empty(), diff.empty() ? "" : "f" + std::to_string(n) + " d: " + diff,
            timer.seconds());
  }
  return rep;
}

Morphism fukaya_plus_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int n_max) {
  const Algebra ap = fukaya_plus(src, 1), bp = fukaya_plus(tgt, 1);
  const int ua = ap.basis.index("1su"), ja = ap.basis.index("j");
  const int ub = bp.basis.index("1su"), jb = bp.basis.index("j");
  auto degree = [&](int x) { return ap.degree_of(x); };
  Morphism out;
  for (int n = 1; n <= n_max; ++n) {
    MultiMap m(n, 1 - n);
    for_each_tuple(ap.basis.size(), n, [&](const std::vector<int>& t) {
      int units = 0;
      for (int x : t) units += x == ua;
      if (units) {
        if (n == 1) m.add(t, ub, 1, src.field);
        return;
      }
      const JSplit s = split_at_j(t, ja, degree);
      if (s.parts.size() == 1) {
        if (const MultiMap* c = f.component("f" + std::to_string(n))) m.add(t, c->apply(t), src.field);
      } else if (n == 1) {
        m.add(t, jb, 1, src.field);  // j f1+ = j + v
        m.add(t, nullary_value(f.component("v")), src.field);
      } else if (const MultiMap* c = f.component("f" + join_parts(s.parts))) {
        m.add(t, c->apply(s.rest), src.field, s.sign);
      }
    });
    out.components["f" + std::to_string(n)] = std::move(m);
  }
  return out;
}

Report check_hu_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt, int bound) {
  if (!src.op("i") || !tgt.op("i")) throw std::invalid_argument("hu-morphism check needs i on both algebras");
  if (!f.component("v")) throw std::invalid_argument("hu-morphism check needs the component v");
  Report rep;
  const Presentation p = Presentation::f1_hu();
  EvalContext ctx{{&src, &tgt}, {&f}};
  for (Label l : generators(p, bound)) {
    Timer timer;
    const Element x(PlanarTree::corolla(l));
    const MultiMap lhs = evaluate(p.differential(x), ctx);
    const MultiMap rhs = boundary(evaluate(x, ctx), src, tgt);
    const std::string diff = first_difference(lhs, rhs, src, tgt, src.field);
    rep.add("hu-morphism/" + label_key(l), diff.empty(), diff.empty() ? "" : label_key(l) + " d: " + diff,
            timer.seconds());
  }
  // v m1 = i^B - i^A f1
  {
    const Element rhs_sym = Presentation::f1_hu().normalize(parse_element("i·ρ∅ - i·f1"));
    MultiMap lhs = boundary(evaluate(Element(PlanarTree::corolla(labels::v())), ctx), src, tgt);
    const std::string diff = first_difference(lhs, evaluate(rhs_sym, ctx), src, tgt, src.field);
    rep.add("hu-morphism/v m1 = i^B - i^A f1", diff.empty(), diff);
  }
  const int n_max = std::max(2, bound - 1);
  const Algebra ap = fukaya_plus(src, n_max), bp = fukaya_plus(tgt, n_max);
  const Morphism fp = fukaya_plus_morphism(f, src, tgt, n_max);
  const int ua = ap.basis.index("1su"), ja = ap.basis.index("j");
  const int ub = bp.basis.index("1su"), jb = bp.basis.index("j");
  const int dim_a = static_cast<int>(src.basis.size()), dim_b = static_cast<int>(tgt.basis.size());
  std::string w1, w2, w3, w4;
  for (int n = 1; n <= n_max; ++n) {
    const MultiMap& m = fp.components.at("f" + std::to_string(n));
    const MultiMap orig = [&] {
      const MultiMap* c = f.component("f" + std::to_string(n));
      return c ? *c : MultiMap(n, 1 - n);
    }();
    for_each_tuple(ap.basis.size(), n, [&](const std::vector<int>& t) {
      bool has_u = false, in_a = true;
      for (int x : t) {
        has_u = has_u || x == ua;
        in_a = in_a && x < dim_a;
      }
      const Vec v = m.apply(t);
      if (has_u && w1.empty()) {
        const Vec expect = n == 1 ? Vec{{ub, 1}} : Vec{};
        if (v != expect) w1 = "f" + std::to_string(n) + "+ " + describe_entry(ap, bp, t, v);
      }
      if (in_a && w3.empty() && v != orig.apply(t)) w3 = "f" + std::to_string(n) + "+ differs from f on " + describe_entry(ap, bp, t, v);
      if (!has_u && n > 1 && w4.empty())
        for (const auto& [b, c] : v)
          if (b >= dim_b) w4 = "f" + std::to_string(n) + "+ leaves B on " + describe_entry(ap, bp, t, v);
    });
  }
  Vec vb = fp.components.at("f1").apply({ja});
  vec_add(vb, jb, -1, src.field);
  for (const auto& [b, c] : vb)
    if (b >= dim_b) w2 = "j f1+ - j has a component on " + bp.basis.names[static_cast<std::size_t>(b)];
  rep.add("hu-morphism/(1) f+ strictly unital", w1.empty(), w1);
  rep.add("hu-morphism/(2) v = j f1+ - j in B", w2.empty(), w2);
  rep.add("hu-morphism/(3) f+ restricts to f", w3.empty(), w3);
  rep.add("hu-morphism/(4) (A+kj)^n f+ in B", w4.empty(), w4);
  Report plus = check_ainf_morphism(fp, ap, bp, n_max);
  for (auto& c : plus.checks) c.id = "hu-morphism/f+ " + c.id.substr(c.id.find('/') + 1);
  rep.append(plus);
  return rep;
}

Morphism compose_morphisms(const Morphism& g, const Morphism& h, const Algebra& a, const Algebra& b, const Algebra& c,
                           int n_max, bool hu) {
  const Presentation p = hu ? Presentation::f1_hu() : Presentation::f1();
  EvalContext ctx{{&a, &b, &c}, {&g, &h}};
  Morphism out;
  std::vector<Label> keys;
  if (hu) keys = generators(p, n_max);
  else
    for (int n = 1; n <= n_max; ++n) keys.push_back(labels::f(n));
  for (Label l : keys) {
    const Element x(PlanarTree::corolla(l));
    out.components[label_key(l)] = evaluate(delta(p, x), ctx);
  }
  return out;
}

Morphism identity_morphism(const Algebra& b, bool hu) {
  Morphism out;
  out.components["f1"] = identity_map(b);
  if (hu) out.components["v"] = MultiMap(0, -1);
  return out;
}

namespace {

// Degree -1 endomorphisms E_(a -> b) of the given arity-1 shape, flattened.
SparseVector flatten(const MultiMap& m, std::size_t dim) {
  std::map<int, mpq_class> e;
  for (const auto& [in, v] : m.entries)
    for (const auto& [b, c] : v) e[in[0] * static_cast<int>(dim) + b] = c;
  return make_sparse(e);
}

}  // namespace

Report check_unitality(const Algebra& a) {
  if (!a.op("i")) throw std::invalid_argument("unitality check needs i");
  Report rep;
  const Field f = a.field;
  const std::size_t dim = a.basis.size();
  const Vec i_vec = nullary_value(a.op("i"));
  Vec di;
  if (const MultiMap* m1 = a.op("m1"))
    for (const auto& [b, c] : i_vec) vec_add(di, m1->apply({b}), c, f);
  rep.add("unitality/i is a cycle", di.empty(), di.empty() ? "" : "i m1 != 0");
  RowEchelon span(f);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      if (a.degree_of(static_cast<int>(y)) != a.degree_of(static_cast<int>(x)) - 1) continue;
      MultiMap h(1, -1);
      h.add({static_cast<int>(x)}, static_cast<int>(y), 1, f);
      span.insert(flatten(boundary(h, a, a), dim));
    }
  const MultiMap m2 = a.op_or_zero("m2");
  for (int side = 0; side < 2; ++side) {
    MultiMap phi = identity_map(a);
    for (std::size_t x = 0; x < dim; ++x)
      for (const auto& [ib, ic] : i_vec) {
        std::vector<int> in = side == 0 ? std::vector<int>{static_cast<int>(x), ib} : std::vector<int>{ib, static_cast<int>(x)};
        phi.add({static_cast<int>(x)}, m2.apply(in), f, -ic);
      }
    const bool ok = boundary(phi, a, a).is_zero() && span.contains(flatten(phi, dim));
    const std::string id = side == 0 ? "unitality/(1 (x) i) m2 ~ 1" : "unitality/(i (x) 1) m2 ~ 1";
    rep.add(id, ok, ok ? "" : "difference with the identity is not a boundary");
  }
  return rep;
}

Report check_unital_morphism(const Morphism& f, const Algebra& src, const Algebra& tgt) {
  if (!src.op("i") || !tgt.op("i")) throw std::invalid_argument("unital morphism check needs i on both algebras");
  Report rep;
  const Field fl = src.field;
  Vec w;
  const MultiMap f1 = f.component("f1") ? *f.component("f1") : MultiMap(1, 0);
  for (const auto& [b, c] : nullary_value(src.op("i"))) vec_add(w, f1.apply({b}), c, fl);
  vec_add(w, nullary_value(tgt.op("i")), -1, fl);
  RowEchelon span(fl);
  const MultiMap* m1 = tgt.op("m1");
  for (std::size_t b = 0; b < tgt.basis.size() && m1; ++b) span.insert(make_sparse(m1->apply({static_cast<int>(b)})));
  const bool ok = span.contains(make_sparse(w));
  rep.add("unital-morphism/i^A f1 - i^B is a boundary", ok,
          ok ? "" : "i^A f1 - i^B = " + describe_entry(tgt, tgt, {}, w).substr(6) + " is not a boundary");
  return rep;
}

Algebra transport_structure(const Algebra& a, const Morphism& f, int n_max) {
  if (!f.component("f1") || !(*f.component("f1") == identity_map(a)))
    throw std::invalid_argument("transport_structure needs f1 = id");
  Algebra out;
  out.field = a.field;
  out.basis = a.basis;
  if (const MultiMap* m1 = a.op("m1")) out.ops["m1"] = *m1;
  const Presentation p = Presentation::f1();
  EvalContext ctx{{&a, &out}, {&f}};
  for (int n = 2; n <= n_max; ++n) {
    const std::string key = "m" + std::to_string(n);
    out.ops[key] = MultiMap(n, 2 - n);
    const Element d = p.differential(PlanarTree::corolla(labels::f(n)));
    std::vector<PlanarTree> kids(static_cast<std::size_t>(n), PlanarTree::corolla(labels::f(1)));
    const PlanarTree lead = PlanarTree::graft(kids, PlanarTree::corolla(labels::m(n)));
    const mpq_class c = d.coefficient(lead) * notation_sign(lead);
    if (c == 0) throw std::logic_error("transport_structure: leading term missing");
    MultiMap residual = add_maps(boundary(evaluate(PlanarTree::corolla(labels::f(n)), ctx), a, out), evaluate(d, ctx), a.field, -1);
    MultiMap m(n, 2 - n);
    for (const auto& [in, v] : residual.entries) m.add(in, v, a.field, mpq_class(1) / c);
    out.ops[key] = std::move(m);
  }
  return out;
}

}  // namespace huainf
