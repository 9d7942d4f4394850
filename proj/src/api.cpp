#include "huainf/api.hpp"

#include <map>
#include <stdexcept>

namespace huainf {
namespace {

using Factory = Presentation (*)();

const std::map<std::string, Factory>& factories() {
  static const std::map<std::string, Factory> m{
      {"ainf", [] { return Presentation::a_infinity(); }}, {"as", [] { return Presentation::as_operad(); }},
      {"ass", [] { return Presentation::ass_operad(); }},  {"ainf-su", [] { return Presentation::a_su_ij(); }},
      {"ainf-hu", [] { return Presentation::a_hu(); }},    {"f1", [] { return Presentation::f1(); }},
      {"fbar1", [] { return Presentation::fbar1(); }},     {"f1-su", [] { return Presentation::f1_su(); }},
      {"f1-hu", [] { return Presentation::f1_hu(); }},     {"as-regular", [] { return Presentation::as_regular(); }}};
  return m;
}

bool is_hu_morphism(const Morphism& f) {
  for (const auto& [key, m] : f.components)
    if (key == "v" || key.find(';') != std::string::npos) return true;
  return false;
}

}  // namespace

std::vector<std::string> presentation_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : factories()) out.push_back(name);
  return out;
}

Presentation presentation_by_name(const std::string& name) {
  auto it = factories().find(name);
  if (it == factories().end()) throw std::invalid_argument("unknown operad or bimodule '" + name + "'");
  return it->second();
}

bool has_nullary_generators(const Presentation& p) { return p.is_hu() || p.is_su() || p.flavor() == Flavor::Ass; }

std::string default_check_mode(const Instance& inst) {
  if (inst.morphism) return is_hu_morphism(*inst.morphism) ? "hu-morphism" : "morphism";
  return inst.source.op("i") ? "hu-algebra" : "ainf";
}

Report check_instance(const Instance& inst, std::string mode, std::optional<int> arity_max) {
  if (mode.empty()) mode = default_check_mode(inst);
  Report r;
  auto schema = [&](const std::string& what, const std::vector<std::string>& errors) {
    std::string w;
    for (const auto& e : errors) w += (w.empty() ? "" : "; ") + e;
    r.add("schema/" + what, errors.empty(), w);
  };
  const Algebra& src = inst.source;
  const Algebra& tgt = inst.target_algebra();
  auto need_morphism = [&] {
    if (!inst.morphism) throw std::invalid_argument("mode " + mode + " needs a \"morphisms\" section");
  };
  auto need_unit = [&](const Algebra& a, const std::string& which) {
    if (!a.op("i")) throw std::invalid_argument("mode " + mode + " needs an operation \"i\" on the " + which);
  };
  const int n = arity_max.value_or(5);
  if (mode == "ainf") {
  } else if (mode == "hu-algebra") {
    need_unit(src, "source");
  } else if (mode == "morphism") {
    need_morphism();
  } else if (mode == "hu-morphism") {
    need_morphism();
    need_unit(src, "source");
    need_unit(tgt, "target");
  } else if (mode == "unitality") {
    need_unit(src, "source");
    if (inst.morphism) need_unit(tgt, "target");
  } else {
    throw std::invalid_argument("unknown check mode '" + mode + "'");
  }
  schema("source", validate(src));
  if (inst.target) schema("target", validate(tgt));
  if (inst.morphism) schema("morphism", validate(*inst.morphism, src, tgt));
  if (!r.pass()) return r;

  if (mode == "ainf") {
    r.append(check_ainf_algebra(src, n));
  } else if (mode == "hu-algebra") {
    r.append(check_ainf_algebra(src, n));
    r.append(check_hu_algebra(src, n + 1));
    r.append(check_fukaya_plus(src, n));
  } else if (mode == "morphism") {
    r.append(check_ainf_algebra(src, n));
    if (inst.target) r.append(check_ainf_algebra(tgt, n));
    if (r.pass()) r.append(check_ainf_morphism(*inst.morphism, src, tgt, n));
  } else if (mode == "hu-morphism") {
    r.append(check_hu_algebra(src, n));
    if (inst.target) r.append(check_hu_algebra(tgt, n));
    if (r.pass()) r.append(check_hu_morphism(*inst.morphism, src, tgt, n));
  } else {
    r.append(check_unitality(src));
    if (inst.morphism) {
      if (inst.target) r.append(check_unitality(tgt));
      r.append(check_unital_morphism(*inst.morphism, src, tgt));
    }
  }
  return r;
}

Instance compose_instances(const Instance& g, const Instance& h, int arity_max) {
  if (!g.morphism || !h.morphism) throw std::invalid_argument("compose needs a \"morphisms\" section in both documents");
  const Algebra& b = g.target_algebra();
  if (!(b.basis == h.source.basis) || !(b.field == h.source.field) || !(b.ops == h.source.ops))
    throw std::invalid_argument("the target algebra of g is not the source algebra of h");
  const bool hu = is_hu_morphism(*g.morphism) || is_hu_morphism(*h.morphism);
  Instance gh;
  gh.source = g.source;
  gh.target = h.target_algebra();
  gh.morphism = compose_morphisms(*g.morphism, *h.morphism, g.source, b, *gh.target, arity_max, hu);
  return gh;
}

}  // namespace huainf
