#include "huainf/label.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace huainf {
namespace {

using LabelKey = std::tuple<Family, std::vector<int>, int>;

class LabelTable {
 public:
  Label intern(Family fam, std::vector<int> parts, int level) {
    LabelKey key{fam, parts, level};
    {
      std::shared_lock lock(mutex_);
      auto it = index_.find(key);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    LabelInfo info = describe(fam, std::move(parts), level);
    Label id = static_cast<Label>(infos_.size());
    infos_.push_back(std::move(info));
    index_.emplace(std::move(key), id);
    return id;
  }

  const LabelInfo& info(Label l) {
    std::shared_lock lock(mutex_);
    if (l < 0 || static_cast<std::size_t>(l) >= infos_.size()) throw std::out_of_range("unknown label id");
    return infos_[static_cast<std::size_t>(l)];
  }

 private:
  static std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t q = 0; q < parts.size(); ++q) {
      if (q) s += ';';
      s += std::to_string(parts[q]);
    }
    return s;
  }

  static LabelInfo describe(Family fam, std::vector<int> parts, int level) {
    LabelInfo li{fam, std::move(parts), level, 0, 0, {}};
    const int n = std::accumulate(li.parts.begin(), li.parts.end(), 0);
    const int k = static_cast<int>(li.parts.size());
    const std::string primes(level > 1 ? static_cast<std::size_t>(level - 1) : 0, '\'');
    switch (fam) {
      case Family::Corolla: li.arity = n; li.degree = 0; li.name = "c" + std::to_string(n); break;
      case Family::M: li.arity = n; li.degree = 2 - n; li.name = "m" + std::to_string(n); break;
      case Family::MHu: li.arity = n; li.degree = 4 - n - 2 * k; li.name = "m" + join_parts(li.parts); break;
      case Family::I: li.name = "i"; break;
      case Family::J: li.degree = -1; li.name = "j"; break;
      case Family::StrictUnit: li.name = "1su"; break;
      case Family::AsOp: li.arity = n; li.name = "m(" + std::to_string(n) + ")"; break;
      case Family::F: li.arity = n; li.degree = 1 - n; li.name = "f" + std::to_string(n) + primes; break;
      case Family::FHu: li.arity = n; li.degree = 3 - n - 2 * k; li.name = "f" + join_parts(li.parts) + primes; break;
      case Family::V: li.degree = -1; li.name = "v" + primes; break;
      case Family::RegularUnit: li.arity = 1; li.name = "1F"; break;
    }
    return li;
  }

  std::shared_mutex mutex_;
  std::deque<LabelInfo> infos_;
  std::map<LabelKey, Label> index_;
};

LabelTable& table() {
  static LabelTable t;
  return t;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const LabelInfo& label_info(Label l) { return table().info(l); }

namespace labels {

Label corolla(int n) {
  require(n >= 0, "corolla arity must be non-negative");
  return table().intern(Family::Corolla, {n}, 0);
}

Label m(int n) {
  require(n >= 2, "m_n requires n >= 2");
  return table().intern(Family::M, {n}, 0);
}

Label m_hu(const std::vector<int>& parts) {
  require(!parts.empty(), "m_{...} needs at least one part");
  int n = 0;
  for (int p : parts) {
    require(p >= 0, "negative part in m_{...}");
    n += p;
  }
  const int k = static_cast<int>(parts.size());
  require(n + k >= 3, "m_{n1;...;nk} requires n + k >= 3");
  if (k == 1) return m(n);
  return table().intern(Family::MHu, parts, 0);
}

Label i() { return table().intern(Family::I, {}, 0); }
Label j() { return table().intern(Family::J, {}, 0); }
Label strict_unit() { return table().intern(Family::StrictUnit, {}, 0); }

Label as(int n) {
  require(n >= 0 && n != 1, "m^(n) label requires n != 1 (m^(1) is the operad unit)");
  return table().intern(Family::AsOp, {n}, 0);
}

Label f(int n, int level) {
  require(n >= 1, "f_n requires n >= 1");
  require(level >= 1, "floor level must be >= 1");
  return table().intern(Family::F, {n}, level);
}

Label f_hu(const std::vector<int>& parts, int level) {
  require(!parts.empty(), "f_{...} needs at least one part");
  require(level >= 1, "floor level must be >= 1");
  int n = 0;
  for (int p : parts) {
    require(p >= 0, "negative part in f_{...}");
    n += p;
  }
  const int k = static_cast<int>(parts.size());
  if (k == 2 && n == 0) return v(level);
  require(n + k >= 2, "f_{n1;...;nk} requires n + k >= 2");
  if (k == 1) return f(n, level);
  return table().intern(Family::FHu, parts, level);
}

Label v(int level) {
  require(level >= 1, "floor level must be >= 1");
  return table().intern(Family::V, {}, level);
}

Label regular_unit() { return table().intern(Family::RegularUnit, {}, 1); }

Label at_level(Label l, int level) {
  const LabelInfo& li = label_info(l);
  if (!li.on_floor() || li.level == level) return l;
  return table().intern(li.family, li.parts, level);
}

std::optional<Label> parse(std::string_view name) {
  std::string s(name);
  int level = 1;
  while (!s.empty() && s.back() == '\'') {
    s.pop_back();
    ++level;
  }
  if (s.empty()) return std::nullopt;
  auto parse_parts = [](std::string body) -> std::optional<std::vector<int>> {
    if (!body.empty() && body.front() == '_') body.erase(0, 1);
    if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    if (body.empty()) return std::nullopt;
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t semi = body.find(';', pos);
      std::string tok = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
      parts.push_back(std::stoi(tok));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    return parts;
  };
  try {
    if (level == 1) {
      if (s == "i") return i();
      if (s == "j") return j();
      if (s == "1su") return strict_unit();
      if (s == "1F") return regular_unit();
      if (s.size() > 3 && s.rfind("m(", 0) == 0 && s.back() == ')') {
        auto p = parse_parts(s.substr(2, s.size() - 3));
        if (!p || p->size() != 1) return std::nullopt;
        return as(p->front());
      }
      if (s.front() == 'm') {
        auto p = parse_parts(s.substr(1));
        if (!p) return std::nullopt;
        return m_hu(*p);
      }
    }
    if (s == "v") return v(level);
    if (s.front() == 'f') {
      auto p = parse_parts(s.substr(1));
      if (!p) return std::nullopt;
      return f_hu(*p, level);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace labels
}  // namespace huainf
