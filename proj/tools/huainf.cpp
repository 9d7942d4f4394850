#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "huainf/api.hpp"
#include "huainf/enumerate.hpp"
#include "huainf/notation.hpp"
#include "huainf/verify.hpp"

using namespace huainf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Presentation presentation(const std::string& name) {
  try {
    return presentation_by_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct ReportOut {
  std::string json_path;
  bool json_stdout = false;
  bool timing = false;

  void add_flags(CLI::App* app) {
    app->add_option("--json", json_path, "Write the JSON report to this file ('-' for stdout)");
    app->add_flag("--timing", timing, "Include per-check wall times");
  }
  int emit(const Report& r, const std::string& title) const {
    if (json_path == "-") {
      std::cout << report_json(r, title, timing);
    } else {
      std::cout << report_table(r, timing);
      if (!json_path.empty()) write_file(json_path, report_json(r, title, timing));
    }
    return r.pass() ? kPass : kFail;
  }
};

// basis

struct BasisArgs {
  std::string operad;
  int arity = 0;
  std::optional<int> degree, degree_min, degree_max, nullary_max;
  bool list = false;
};

int cmd_basis(const BasisArgs& a) {
  const Presentation p = presentation(a.operad);
  if (a.degree && (a.degree_min || a.degree_max)) throw UsageError("--degree excludes --degree-min/--degree-max");
  int k = 0;
  if (has_nullary_generators(p)) {
    if (!a.nullary_max) throw UsageError(a.operad + " has nullary generators: its basis is infinite, pass --nullary-max");
    if (!a.degree && !a.degree_min) throw UsageError(a.operad + " has generators of unbounded negative degree, pass --degree or --degree-min");
    k = *a.nullary_max;
  }
  const int lo = a.degree ? *a.degree : a.degree_min.value_or(std::numeric_limits<int>::min());
  const int hi = a.degree ? *a.degree : a.degree_max.value_or(std::numeric_limits<int>::max());
  const auto by_degree = basis_by_degree(p, a.arity, k);
  std::size_t total = 0;
  std::cout << p.name() << " arity " << a.arity;
  if (k > 0) std::cout << " (at most " << k << " nullary leaves)";
  std::cout << "\ndegree  dim\n";
  for (const auto& [d, trees] : by_degree) {
    if (d < lo || d > hi) continue;
    std::cout << std::setw(6) << d << "  " << trees.size() << "\n";
    total += trees.size();
  }
  std::cout << " total  " << total << "\n";
  if (a.list)
    for (const auto& [d, trees] : by_degree) {
      if (d < lo || d > hi) continue;
      for (const auto& t : trees) std::cout << d << "\t" << format_tree(t, !p.is_operad()) << "\n";
    }
  return kPass;
}

// diff

int cmd_diff(const std::string& name, const std::string& element) {
  const Presentation p = presentation(name);
  Element x;
  try {
    x = p.normalize(parse_element(element));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << format_element(p.differential(x), !p.is_operad()) << "\n";
  return kPass;
}

// check

int cmd_check(const std::string& path, const std::string& mode, std::optional<int> arity_max, const ReportOut& out) {
  const Instance inst = read_instance(path);
  const std::string m = mode.empty() ? default_check_mode(inst) : mode;
  return out.emit(check_instance(inst, m, arity_max), "check " + m);
}

// compose

int cmd_compose(const std::string& g_path, const std::string& h_path, const std::string& out_path, int arity_max) {
  const std::string text = write_instance(compose_instances(read_instance(g_path), read_instance(h_path), arity_max));
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_file(out_path, text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for non-symmetric dg-operads and bimodules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "huainf 0.1.0");

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis", "Dimension table (and listing) of an arity component");
  c_basis->add_option("--operad,--bimodule", basis.operad, "ainf, as, ass, ainf-su, ainf-hu, f1, fbar1, f1-su, f1-hu")->required();
  c_basis->add_option("--arity", basis.arity)->required()->check(CLI::NonNegativeNumber);
  c_basis->add_option("--degree", basis.degree);
  c_basis->add_option("--degree-min", basis.degree_min);
  c_basis->add_option("--degree-max", basis.degree_max);
  c_basis->add_option("--nullary-max", basis.nullary_max, "Bound on nullary leaves (i, j, hidden j's)")->check(CLI::NonNegativeNumber);
  c_basis->add_flag("--list", basis.list, "Print the basis trees");

  std::string diff_name, diff_element;
  auto* c_diff = app.add_subcommand("diff", "Differential of an element");
  c_diff->add_option("--operad,--bimodule", diff_name)->required();
  c_diff->add_option("--element", diff_element)->required();

  std::string suite = "all";
  SuiteOptions suite_opt;
  int arity_max = 0;
  ReportOut report_out;
  auto add_suite_flags = [&](CLI::App* c) {
    c->add_option("--arity-max", arity_max, "Size bound (suite default when omitted)")->check(CLI::PositiveNumber);
    c->add_option("--degree-min", suite_opt.degree_min, "Lowest degree of the homology window")->capture_default_str();
    c->add_option("--jobs,-j", suite_opt.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    report_out.add_flags(c);
  };
  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("--suite", suite)->check(CLI::IsMember({"dsq", "homotopy", "coalgebra", "homology", "all"}))->capture_default_str();
  add_suite_flags(c_verify);
  auto* c_hcheck = app.add_subcommand("homotopy-check", "Same as verify --suite homotopy");
  add_suite_flags(c_hcheck);
  auto* c_ccheck = app.add_subcommand("coalgebra-check", "Same as verify --suite coalgebra");
  add_suite_flags(c_ccheck);

  std::string instance_path, check_mode;
  std::optional<int> check_arity;
  auto* c_check = app.add_subcommand("check", "Check an instance document");
  c_check->add_option("--instance", instance_path)->required();
  c_check->add_option("--as", check_mode)->check(CLI::IsMember({"ainf", "hu-algebra", "morphism", "hu-morphism", "unitality"}));
  c_check->add_option("--arity-max", check_arity)->check(CLI::PositiveNumber);
  report_out.add_flags(c_check);

  std::string g_path, h_path, out_path;
  int compose_arity = 5;
  auto* c_compose = app.add_subcommand("compose", "Composite g.h of two morphism documents");
  c_compose->set_help_flag("--help", "Print this help message and exit");
  c_compose->add_option("--g", g_path)->required();
  c_compose->add_option("--h", h_path)->required();
  c_compose->add_option("--out", out_path, "Output document ('-' for stdout)");
  c_compose->add_option("--arity-max", compose_arity, "Components to compute")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (arity_max > 0) suite_opt.arity_max = arity_max;
    if (*c_basis) return cmd_basis(basis);
    if (*c_diff) return cmd_diff(diff_name, diff_element);
    if (*c_verify) return report_out.emit(run_suite(suite, suite_opt), "verify " + suite);
    if (*c_hcheck) return report_out.emit(run_suite("homotopy", suite_opt), "verify homotopy");
    if (*c_ccheck) return report_out.emit(run_suite("coalgebra", suite_opt), "verify coalgebra");
    if (*c_check) return cmd_check(instance_path, check_mode, check_arity, report_out);
    if (*c_compose) return cmd_compose(g_path, h_path, out_path, compose_arity);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
