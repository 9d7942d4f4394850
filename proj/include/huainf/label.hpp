#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace huainf {

// Vertex labels. Every label is interned once in a process-wide table and
// referred to by a small integer id, so tree encodings are plain integer
// sequences.
using Label = std::int32_t;
inline constexpr Label kInput = -1;

enum class Family : std::uint8_t {
  Corolla,       // unlabeled n-ary vertex (pure combinatorics)
  M,             // m_n of A-infinity, n >= 2, degree 2-n
  MHu,           // m_{n1;...;nk}, k >= 2, degree 4-n-2k
  I,             // homotopy unit i
  J,             // j, degree -1, j d = 1su - i
  StrictUnit,    // 1su
  AsOp,          // m^(n) of As / Ass
  F,             // f_n, degree 1-n, on a floor
  FHu,           // f_{n1;...;nk}, k >= 2, degree 3-n-2k, on a floor
  V,             // v = j f_1 - j rho_0, degree -1, on a floor
  RegularUnit,   // 1^F generating the regular As-bimodule
};

struct LabelInfo {
  Family family;
  std::vector<int> parts;  // semicolon pattern (a single entry for m_n, f_n, m^(n))
  int level = 0;           // floor level (1 = topmost); 0 for operad labels
  int arity = 0;
  int degree = 0;
  std::string name;

  bool on_floor() const { return level > 0; }
};

const LabelInfo& label_info(Label l);
inline int label_arity(Label l) { return l == kInput ? 0 : label_info(l).arity; }
inline int label_degree(Label l) { return l == kInput ? 0 : label_info(l).degree; }

namespace labels {

Label corolla(int n);
Label m(int n);
// m_{n1;...;nk}; a single part gives m_n.
Label m_hu(const std::vector<int>& parts);
Label i();
Label j();
Label strict_unit();
Label as(int n);
Label f(int n, int level = 1);
// f_{n1;...;nk}; a single part gives f_n and {0,0} gives v.
Label f_hu(const std::vector<int>& parts, int level = 1);
Label v(int level = 1);
Label regular_unit();

// Same label moved to another floor level.
Label at_level(Label l, int level);

// Parses the textual key grammar: m2, m_2, m1;0, f3, f_1;0, f2', v, i, j,
// 1su, m(3), 1F. Primes mark floor levels below the first.
std::optional<Label> parse(std::string_view name);

}  // namespace labels

}  // namespace huainf
