#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "huainf/report.hpp"

namespace huainf {

struct SuiteOptions {
  std::optional<int> arity_max;  // suite default when unset
  int degree_min = -2;           // lower end of the homology window
  int jobs = 1;
};

// One independent unit of verification work.
struct Task {
  std::string id;
  std::function<Report()> run;
};

const std::vector<std::string>& suite_names();  // dsq, homotopy, coalgebra, homology
// Throws std::invalid_argument for an unknown suite; "all" runs every suite.
std::vector<Task> suite_tasks(const std::string& suite, const SuiteOptions& opt);
// Runs the tasks on `jobs` threads; results keep task order. Per-check
// timings are filled in from the task wall time when a task leaves them 0.
Report run_tasks(const std::vector<Task>& tasks, int jobs);
Report run_suite(const std::string& suite, const SuiteOptions& opt);

// Machine-readable report; timings only when requested so the default
// output is reproducible byte for byte.
std::string report_json(const Report& r, const std::string& title, bool with_timing);
// Human-readable table.
std::string report_table(const Report& r, bool with_timing);

}  // namespace huainf
