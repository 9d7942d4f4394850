#include "huainf/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace huainf {
namespace {

using nlohmann::json;

mpq_class parse_coef(const json& j, const std::string& path, Field f) {
  std::string text;
  if (j.is_number_integer()) text = std::to_string(j.get<long long>());
  else if (j.is_string()) text = j.get<std::string>();
  else throw InstanceError(path, "coefficient must be an integer or a fraction string");
  try {
    return Scalar::parse(f, text).value();
  } catch (const std::exception& e) {
    throw InstanceError(path, std::string("bad coefficient: ") + e.what());
  }
}

Field parse_ring(const json& doc) {
  if (!doc.contains("ring")) return Field::rationals();
  const json& r = doc["ring"];
  if (r.is_string() && r.get<std::string>() == "Q") return Field::rationals();
  if (r.is_object() && r.size() == 1 && r.contains("Fp") && r["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(r["Fp"].get<std::uint32_t>());
    } catch (const std::exception& e) {
      throw InstanceError("/ring/Fp", e.what());
    }
  }
  throw InstanceError("/ring", "expected \"Q\" or {\"Fp\": p}");
}

void only_fields(const json& e, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : e.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InstanceError(path + "/" + k, "unknown field");
  }
}

GradedBasis parse_module(const json& m, const std::string& path) {
  if (!m.is_array()) throw InstanceError(path, "expected an array of {name, degree}");
  GradedBasis b;
  for (std::size_t q = 0; q < m.size(); ++q) {
    const std::string p = path + "/" + std::to_string(q);
    const json& e = m[q];
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("degree") ||
        !e["degree"].is_number_integer())
      throw InstanceError(p, "expected {\"name\": string, \"degree\": integer}");
    only_fields(e, p, {"name", "degree"});
    const std::string name = e["name"].get<std::string>();
    if (name.empty()) throw InstanceError(p + "/name", "empty basis name");
    if (b.index(name) >= 0) throw InstanceError(p + "/name", "duplicate basis element '" + name + "'");
    b.add(name, e["degree"].get<int>());
  }
  return b;
}

MultiMap parse_table(const json& t, const std::string& path, const std::string& key, const Algebra& src,
                     const Algebra& tgt, Field f) {
  const SymbolKey k = *parse_key(key);
  if (!t.is_array()) throw InstanceError(path, "expected an array of entries");
  MultiMap m(k.arity(), k.degree());
  for (std::size_t q = 0; q < t.size(); ++q) {
    const std::string p = path + "/" + std::to_string(q);
    const json& e = t[q];
    if (!e.is_object() || !e.contains("in") || !e["in"].is_array() || !e.contains("out") || !e["out"].is_string())
      throw InstanceError(p, "expected {\"in\": [...], \"out\": name, \"coef\": value}");
    only_fields(e, p, {"in", "out", "coef"});
    if (static_cast<int>(e["in"].size()) != k.arity())
      throw InstanceError(p + "/in", key + " takes " + std::to_string(k.arity()) + " arguments");
    std::vector<int> in;
    int d = 0;
    for (std::size_t r = 0; r < e["in"].size(); ++r) {
      const json& x = e["in"][r];
      const int idx = x.is_string() ? src.basis.index(x.get<std::string>()) : -1;
      if (idx < 0) throw InstanceError(p + "/in/" + std::to_string(r), "unknown basis element " + x.dump());
      in.push_back(idx);
      d += src.degree_of(idx);
    }
    const int out = tgt.basis.index(e["out"].get<std::string>());
    if (out < 0) throw InstanceError(p + "/out", "unknown basis element " + e["out"].dump());
    if (tgt.degree_of(out) - d != k.degree())
      throw InstanceError(p, "degree mismatch: " + key + " has degree " + std::to_string(k.degree()));
    const mpq_class c = e.contains("coef") ? parse_coef(e["coef"], p + "/coef", f) : mpq_class(1);
    m.add(in, out, c, f);
  }
  return m;
}

Algebra parse_algebra(const json& doc, const std::string& path, Field f) {
  Algebra a;
  a.field = f;
  if (!doc.contains("module")) throw InstanceError(path.empty() ? "/" : path, "missing \"module\"");
  a.basis = parse_module(doc["module"], path + "/module");
  if (doc.contains("operations")) {
    const json& ops = doc["operations"];
    if (!ops.is_object()) throw InstanceError(path + "/operations", "expected an object");
    for (const auto& [name, table] : ops.items()) {
      const std::string p = path + "/operations/" + name;
      auto k = parse_key(name);
      if (!k || k->kind == 'f' || k->kind == 'v') throw InstanceError(p, "unknown operation key '" + name + "'");
      const std::string key = k->str();
      if (a.ops.count(key)) throw InstanceError(p, "operation given twice");
      a.ops[key] = parse_table(table, p, key, a, a, f);
    }
  }
  return a;
}

json entries_json(const MultiMap& m, const Algebra& src, const Algebra& tgt) {
  json arr = json::array();
  for (const auto& [in, v] : m.entries)
    for (const auto& [b, c] : v) {
      json ins = json::array();
      for (int x : in) ins.push_back(src.basis.names[static_cast<std::size_t>(x)]);
      arr.push_back({{"in", ins}, {"out", tgt.basis.names[static_cast<std::size_t>(b)]}, {"coef", c.get_str()}});
    }
  return arr;
}

json algebra_json(const Algebra& a) {
  json mod = json::array();
  for (std::size_t q = 0; q < a.basis.size(); ++q) mod.push_back({{"name", a.basis.names[q]}, {"degree", a.basis.degrees[q]}});
  json ops = json::object();
  for (const auto& [key, m] : a.ops) ops[key] = entries_json(m, a, a);
  return {{"module", mod}, {"operations", ops}};
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the offset of the error; report it as a line number
    std::size_t line = 1;
    for (std::size_t q = 0; q < text.size() && q + 1 < e.byte; ++q) line += text[q] == '\n';
    throw InstanceError("/", "JSON syntax error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) throw InstanceError("/", "expected a JSON object");
  for (const auto& [k, v] : doc.items())
    if (k != "ring" && k != "module" && k != "operations" && k != "target" && k != "morphisms")
      throw InstanceError("/" + k, "unknown field");
  const Field f = parse_ring(doc);
  Instance inst;
  inst.source = parse_algebra(doc, "", f);
  if (doc.contains("target")) {
    if (!doc["target"].is_object()) throw InstanceError("/target", "expected an object");
    only_fields(doc["target"], "/target", {"module", "operations"});
    inst.target = parse_algebra(doc["target"], "/target", f);
  }
  if (doc.contains("morphisms")) {
    const json& ms = doc["morphisms"];
    if (!ms.is_object()) throw InstanceError("/morphisms", "expected an object");
    Morphism m;
    for (const auto& [name, table] : ms.items()) {
      const std::string p = "/morphisms/" + name;
      auto k = parse_key(name);
      if (!k || (k->kind != 'f' && k->kind != 'v')) throw InstanceError(p, "unknown component key '" + name + "'");
      const std::string key = k->str();
      if (m.components.count(key)) throw InstanceError(p, "component given twice");
      m.components[key] = parse_table(table, p, key, inst.source, inst.target_algebra(), f);
    }
    inst.morphism = std::move(m);
  }
  return inst;
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("/", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_instance(const Instance& inst) {
  const Field f = inst.source.field;
  json doc = algebra_json(inst.source);
  doc["ring"] = f.is_rational() ? json("Q") : json({{"Fp", f.p}});
  if (inst.target) doc["target"] = algebra_json(*inst.target);
  if (inst.morphism) {
    json ms = json::object();
    for (const auto& [key, m] : inst.morphism->components) ms[key] = entries_json(m, inst.source, inst.target_algebra());
    doc["morphisms"] = ms;
  }
  return doc.dump(2) + "\n";
}

}  // namespace huainf
