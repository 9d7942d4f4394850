#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "huainf/api.hpp"
#include "huainf/coalgebra.hpp"
#include "huainf/enumerate.hpp"
#include "huainf/homology.hpp"
#include "huainf/homotopy.hpp"
#include "huainf/notation.hpp"
#include "huainf/verify.hpp"

namespace py = pybind11;
using namespace huainf;

namespace {

Field field_of(unsigned p) { return p == 0 ? Field::rationals() : Field::prime(p); }

Element parse_over(const Presentation& p, const std::string& text) { return p.normalize(parse_element(text)); }

std::map<int, std::vector<std::string>> basis(const std::string& name, int arity, int nullary_max) {
  const Presentation p = presentation_by_name(name);
  if (has_nullary_generators(p) && nullary_max <= 0)
    throw std::invalid_argument(name + " has nullary generators: pass nullary_max > 0");
  std::map<int, std::vector<std::string>> out;
  for (const auto& [d, trees] : basis_by_degree(p, arity, nullary_max))
    for (const auto& t : trees) out[d].push_back(format_tree(t, !p.is_operad()));
  return out;
}

std::map<int, std::size_t> homology(const std::string& name, int arity, int nullary_max, unsigned prime,
                                    std::optional<int> lo, std::optional<int> hi) {
  const HomologyReport h = chain_homology(presentation_by_name(name), arity, nullary_max, field_of(prime), lo, hi);
  if (!h.composite_zero) throw std::runtime_error("d o d is not zero on " + name);
  std::map<int, std::size_t> out;
  for (const auto& d : h.degrees) out[d.degree] = d.homology();
  return out;
}

}  // namespace

PYBIND11_MODULE(_huainf, m) {
  m.doc() = "Symbolic engine for non-symmetric dg-operads and bimodules";

  m.def("presentation_names", &presentation_names, "Names accepted by the other functions");
  m.def(
      "normalize",
      [](const std::string& name, const std::string& element) {
        const Presentation p = presentation_by_name(name);
        return format_element(parse_over(p, element), !p.is_operad());
      },
      py::arg("name"), py::arg("element"), "Normal form of an element, printed");
  m.def(
      "diff",
      [](const std::string& name, const std::string& element) {
        const Presentation p = presentation_by_name(name);
        return format_element(p.differential(parse_over(p, element)), !p.is_operad());
      },
      py::arg("name"), py::arg("element"), "Differential of an element, printed");
  m.def(
      "delta",
      [](const std::string& name, const std::string& element) {
        const Presentation p = presentation_by_name(name);
        return format_element(delta(p, parse_over(p, element)), true);
      },
      py::arg("name"), py::arg("element"), "Comultiplication on f1, f1-su or f1-hu");
  m.def(
      "counit",
      [](const std::string& name, const std::string& element) {
        const Presentation p = presentation_by_name(name);
        return format_element(counit(p, parse_over(p, element)), false);
      },
      py::arg("name"), py::arg("element"), "Counit on f1, f1-su or f1-hu");
  m.def("basis", &basis, py::arg("name"), py::arg("arity"), py::arg("nullary_max") = 0,
        "Basis trees of an arity component, by degree");
  m.def("homology", &homology, py::arg("name"), py::arg("arity"), py::arg("nullary_max") = 0,
        py::arg("prime") = 0, py::arg("lo") = py::none(), py::arg("hi") = py::none(),
        "Homology dimensions by degree (prime = 0 for the rationals)");
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> arity_max, int degree_min, int jobs, bool timing) {
        SuiteOptions opt;
        opt.arity_max = arity_max;
        opt.degree_min = degree_min;
        opt.jobs = jobs;
        Report r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, opt);
        }
        return report_json(r, "verify " + suite, timing);
      },
      py::arg("suite") = "all", py::arg("arity_max") = py::none(), py::arg("degree_min") = -2, py::arg("jobs") = 1,
      py::arg("timing") = false, "Runs a verification suite; returns the JSON report");
  m.def(
      "check_instance",
      [](const std::string& text, const std::string& mode, std::optional<int> arity_max) {
        const Instance inst = parse_instance(text);
        const std::string md = mode.empty() ? default_check_mode(inst) : mode;
        Report r;
        {
          py::gil_scoped_release release;
          r = check_instance(inst, md, arity_max);
        }
        return report_json(r, "check " + md, false);
      },
      py::arg("text"), py::arg("mode") = "", py::arg("arity_max") = py::none(),
      "Checks an instance document (JSON text); returns the JSON report");
  m.def(
      "compose_instances",
      [](const std::string& g, const std::string& h, int arity_max) {
        return write_instance(compose_instances(parse_instance(g), parse_instance(h), arity_max));
      },
      py::arg("g"), py::arg("h"), py::arg("arity_max") = 5, "Composite g.h of two morphism documents");

  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
}
