#pragma once

#include <string>
#include <vector>

namespace huainf {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;  // offending relation or term when failing
  double seconds = 0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  void add(std::string id, bool pass, std::string witness = {}, double seconds = 0) {
    checks.push_back({std::move(id), pass, std::move(witness), seconds});
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace huainf
