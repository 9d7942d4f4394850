#include "huainf/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "huainf/coalgebra.hpp"
#include "huainf/generators.hpp"
#include "huainf/homology.hpp"
#include "huainf/homotopy.hpp"
#include "huainf/notation.hpp"
#include "json.hpp"

namespace huainf {
namespace {

std::string join(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : "; ") + x;
  return s;
}

void dsq_tasks(std::vector<Task>& out, int a) {
  const std::vector<std::pair<Presentation, int>> items{
      {Presentation::a_infinity(), a}, {Presentation::a_su_ij(), a}, {Presentation::a_hu(), a},
      {Presentation::f1(), a},         {Presentation::fbar1(), a},   {Presentation::f1_su(), a},
      {Presentation::f1_hu(), a - 1}};
  for (const auto& [p, bound] : items)
    for (Label g : generators(p, bound)) {
      const std::string id = "dsq/" + p.name() + "/" + label_info(g).name;
      out.push_back({id, [p, g, id] {
                       Report r;
                       const Element d = p.generator_differential(g);
                       const Element dd = p.differential(d);
                       bool degree_ok = true;
                       for (const auto& [t, c] : d.terms()) degree_ok = degree_ok && t.degree() == label_degree(g) + 1;
                       std::string w;
                       if (!dd.is_zero()) w = "d d = " + format_element(dd, !p.is_operad());
                       else if (!degree_ok) w = "d does not raise the degree by one";
                       r.add(id, w.empty(), w);
                       return r;
                     }});
    }
}

void homotopy_tasks(std::vector<Task>& out, int a) {
  for (int n = 1; n <= a; ++n) {
    const std::string id = "homotopy/fbar1/arity=" + std::to_string(n);
    out.push_back({id, [n, id] {
                     Report r;
                     const HomotopyReport h = verify_homotopy_arity(n);
                     r.add(id + " (" + std::to_string(h.keys) + " keys)", h.pass(), join(h.witnesses));
                     return r;
                   }});
  }
}

void coalgebra_tasks(std::vector<Task>& out, int a) {
  const std::vector<std::pair<Presentation, int>> items{
      {Presentation::f1(), a}, {Presentation::f1_su(), a - 1}, {Presentation::f1_hu(), a - 1}};
  for (const auto& [p, bound] : items)
    for (const PlanarTree& t : coalgebra_keys(p, bound)) {
      const std::string id = "coalgebra/" + p.name() + "/" + format_tree(t, true);
      out.push_back({id, [p, t, id] {
                       Report r;
                       const CoalgebraReport c = verify_coalgebra(p, {t});
                       r.add(id, c.pass(), join(c.witnesses));
                       return r;
                     }});
    }
  out.push_back({"coalgebra/f1-hu/v delta = v (x) f1 + v", [] {
                   Report r;
                   const Presentation p = Presentation::f1_hu();
                   const Element d = delta(p, Element(PlanarTree::corolla(labels::v())));
                   const Element expect = Presentation::f1_hu(2).normalize(parse_element("v·f1' + v'"));
                   r.add("coalgebra/f1-hu/v delta = v (x) f1 + v", d == expect, d == expect ? "" : format_element(d, true));
                   return r;
                 }});
  out.push_back({"coalgebra/f1-hu/delta rho0 = rho0 on i", [] {
                   Report r;
                   const Element x(PlanarTree::corolla(labels::i()));
                   const Element d = delta(Presentation::f1_hu(), x);
                   r.add("coalgebra/f1-hu/delta rho0 = rho0 on i", d == x, d == x ? "" : format_element(d, true));
                   return r;
                 }});
}

void homology_tasks(std::vector<Task>& out, int a, int degree_min) {
  struct Item {
    Presentation p;
    int n;
    int k;
    bool windowed;
  };
  std::vector<Item> items;
  for (int n = 1; n <= std::min(a, 5); ++n) items.push_back({Presentation::a_infinity(), n, 0, false});
  for (int n = 1; n <= std::min(a, 5); ++n) items.push_back({Presentation::f1(), n, 0, false});
  for (const Presentation& p : {Presentation::a_hu(), Presentation::f1_hu()})
    for (int n = 0; n <= std::min(a, 4); ++n)
      for (int k = 1; k <= std::max(1, 4 - n); ++k) items.push_back({p, n, k, true});
  for (const Item& it : items) {
    std::string id = "homology/" + it.p.name() + "/n=" + std::to_string(it.n);
    if (it.windowed) id += "/K=" + std::to_string(it.k);
    out.push_back({id, [it, id, degree_min] {
                     Report r;
                     std::optional<int> lo, hi;
                     if (it.windowed) {
                       lo = degree_min;
                       hi = 1;
                     }
                     const HomologyReport h = chain_homology(it.p, it.n, it.k, Field::rationals(), lo, hi);
                     bool ok = h.composite_zero;
                     std::string dims;
                     for (const auto& d : h.degrees) {
                       const std::size_t expect = d.degree == 0 ? 1 : 0;
                       ok = ok && d.homology() == expect;
                       dims += (dims.empty() ? "" : " ") + std::to_string(d.degree) + ":" + std::to_string(d.homology());
                     }
                     if (!h.at(0)) ok = false;
                     r.add(id, ok, "H by degree " + dims);
                     return r;
                   }});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dsq", "homotopy", "coalgebra", "homology"};
  return names;
}

std::vector<Task> suite_tasks(const std::string& suite, const SuiteOptions& opt) {
  std::vector<Task> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto t = suite_tasks(s, opt);
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }
  if (suite == "dsq") dsq_tasks(out, opt.arity_max.value_or(7));
  else if (suite == "homotopy") homotopy_tasks(out, opt.arity_max.value_or(6));
  else if (suite == "coalgebra") coalgebra_tasks(out, opt.arity_max.value_or(6));
  else if (suite == "homology") homology_tasks(out, opt.arity_max.value_or(5), opt.degree_min);
  else throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

Report run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Report> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t q = next++; q < tasks.size(); q = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      Report r;
      try {
        r = tasks[q].run();
      } catch (const std::exception& e) {
        r.add(tasks[q].id, false, std::string("exception: ") + e.what());
      }
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& c : r.checks)
        if (c.seconds == 0) c.seconds = s / static_cast<double>(r.checks.size());
      results[q] = std::move(r);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int q = 1; q < n; ++q) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report out;
  for (const auto& r : results) out.append(r);
  return out;
}

Report run_suite(const std::string& suite, const SuiteOptions& opt) { return run_tasks(suite_tasks(suite, opt), opt.jobs); }

std::string report_json(const Report& r, const std::string& title, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["status"] = r.pass() ? "pass" : "fail";
  doc["total"] = r.checks.size();
  doc["failed"] = r.failures();
  double total = 0;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["status"] = c.pass ? "pass" : "fail";
    j["witness"] = c.witness;
    if (with_timing) j["timing"] = c.seconds;
    total += c.seconds;
    checks.push_back(j);
  }
  doc["checks"] = checks;
  if (with_timing) doc["timing"] = total;
  return doc.dump(2) + "\n";
}

std::string report_table(const Report& r, bool with_timing) {
  std::ostringstream s;
  for (const auto& c : r.checks) {
    s << (c.pass ? "PASS  " : "FAIL  ") << c.id;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.3fs)", c.seconds);
      s << buf;
    }
    if (!c.witness.empty()) s << "\n      " << c.witness;
    s << "\n";
  }
  s << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  return s.str();
}

}  // namespace huainf
