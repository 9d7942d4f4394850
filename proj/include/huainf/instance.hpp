#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "huainf/eval.hpp"

namespace huainf {

// Schema or parse problem in an instance document; `path` is a JSON pointer.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An algebra, optionally a target algebra (defaults to the source) and one
// morphism source -> target. See docs/instance-format.md.
struct Instance {
  Algebra source;
  std::optional<Algebra> target;
  std::optional<Morphism> morphism;

  const Algebra& target_algebra() const { return target ? *target : source; }
};

Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& path);
std::string write_instance(const Instance& inst);

}  // namespace huainf
