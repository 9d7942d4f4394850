#include "huainf/generators.hpp"

#include <functional>

namespace huainf {

std::vector<std::vector<int>> semicolon_patterns(int size, int k) {
  std::vector<std::vector<int>> out;
  const int n = size - k;
  if (n < 0 || k < 1) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int parts) {
    if (parts == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur.push_back(a);
      rec(left - a, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

std::vector<Label> generators(const Presentation& p, int bound) {
  std::vector<Label> out;
  switch (p.flavor()) {
    case Flavor::As:
      for (int n = 2; n <= bound; ++n) out.push_back(labels::as(n));
      break;
    case Flavor::Ass:
      for (int n = 0; n <= bound; ++n)
        if (n != 1) out.push_back(labels::as(n));
      break;
    case Flavor::Ainf:
      for (int n = 2; n <= bound; ++n) out.push_back(labels::m(n));
      break;
    case Flavor::AinfSu:
      out = {labels::i(), labels::j(), labels::strict_unit()};
      for (int n = 2; n <= bound; ++n) out.push_back(labels::m(n));
      break;
    case Flavor::AinfHu:
      out.push_back(labels::i());
      for (int size = 3; size <= bound; ++size)
        for (int k = 1; k <= size; ++k)
          for (const auto& parts : semicolon_patterns(size, k)) out.push_back(labels::m_hu(parts));
      break;
    case Flavor::F1:
    case Flavor::F1Su:
    case Flavor::F1Bar:
      for (int n = 1; n <= bound; ++n) out.push_back(labels::f(n));
      break;
    case Flavor::AsRegular:
      out.push_back(labels::regular_unit());
      break;
    case Flavor::F1Hu:
      for (int size = 2; size <= bound; ++size)
        for (int k = 1; k <= size; ++k)
          for (const auto& parts : semicolon_patterns(size, k)) out.push_back(labels::f_hu(parts));
      break;
  }
  return out;
}

}  // namespace huainf
