#include "huainf/notation.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "huainf/koszul.hpp"

namespace huainf {
namespace {

constexpr std::string_view kTensor = "⊗";
constexpr std::string_view kDot = "·";
constexpr std::string_view kRho = "ρ∅";

bool has_floor(const PlanarTree& t) {
  for (Label l : t.code())
    if (l != kInput && label_info(l).on_floor()) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Element parse() {
    skip();
    Element out;
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (eat("+")) {
        sign = 1;
      } else if (eat("-")) {
        sign = -1;
      } else if (!first) {
        fail("expected + or -");
      }
      skip();
      mpq_class coef = sign;
      if (auto c = coefficient()) coef *= *c;
      skip();
      PlanarTree t = tree();
      if (!out.is_zero() && out.arity() != t.arity()) fail("terms of different arity");
      if (out.is_zero()) out = Element(t.arity());
      out.add(t, coef * notation_sign(t));
      first = false;
    }
    if (first) fail("empty expression");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // A number is a coefficient only when another term body follows it.
  std::optional<mpq_class> coefficient() {
    std::size_t p = pos_;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == pos_) return std::nullopt;
    std::size_t end = p;
    if (end < s_.size() && s_[end] == '/') {
      ++end;
      std::size_t d = end;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      if (end == d) return std::nullopt;
    }
    std::size_t q = end;
    if (q < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[q])) || s_[q] == '\''))
      return std::nullopt;  // 1su, 1F
    bool star = false;
    while (q < s_.size() && (std::isspace(static_cast<unsigned char>(s_[q])) || s_[q] == '*')) {
      star = star || s_[q] == '*';
      ++q;
    }
    if (q >= s_.size() || s_[q] == '+' || s_[q] == '-') return std::nullopt;
    if (s_.substr(q, kDot.size()) == kDot || s_[q] == '.') return std::nullopt;
    (void)star;
    mpq_class c(std::string(s_.substr(pos_, end - pos_)));
    c.canonicalize();
    pos_ = q;
    return c;
  }

  std::string ident() {
    std::size_t start = pos_;
    if (eat("1su") || eat("1F")) return std::string(s_.substr(start, pos_ - start));
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == ';' || ch == '_' || ch == '{' || ch == '}' || ch == '\'') {
        ++pos_;
      } else if (ch == '(' && pos_ > start && s_.substr(start, pos_ - start) == "m") {
        std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unclosed m(");
        pos_ = close + 1;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a label");
    return std::string(s_.substr(start, pos_ - start));
  }

  Label label() {
    std::size_t at = pos_;
    std::string name = ident();
    auto l = labels::parse(name);
    if (!l) {
      pos_ = at;
      fail("unknown generator '" + name + "'");
    }
    return *l;
  }

  PlanarTree apply(Label l, std::vector<PlanarTree> kids) {
    if (static_cast<int>(kids.size()) != label_arity(l)) fail("wrong number of arguments for " + label_info(l).name);
    return PlanarTree::graft(kids, PlanarTree::corolla(l));
  }

  PlanarTree atom() {
    skip();
    if (eat("(")) {
      std::vector<PlanarTree> kids{tree()};
      skip();
      while (eat(kTensor) || eat("*")) {
        kids.push_back(tree());
        skip();
      }
      if (!eat(")")) fail("expected )");
      skip();
      return apply(label(), std::move(kids));
    }
    if (pos_ < s_.size() && s_[pos_] == '1' && s_.substr(pos_, 3) != "1su" && s_.substr(pos_, 2) != "1F") {
      ++pos_;
      return PlanarTree::unit();
    }
    return PlanarTree::corolla(label());
  }

  PlanarTree tree() {
    PlanarTree t = atom();
    while (true) {
      std::size_t save = pos_;
      skip();
      if (eat(kDot) || eat(".")) {
        skip();
        if (eat(kRho) || eat("rho0")) continue;
        t = apply(label(), {t});
        continue;
      }
      pos_ = save;
      return t;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

int notation_sign(const PlanarTree& t) {
  TreeShape s(t);
  std::vector<std::size_t> tetris = t.tetris_order();
  std::vector<std::size_t> slot(s.size(), 0);
  std::vector<int> deg;
  for (std::size_t k = 0; k < tetris.size(); ++k) {
    slot[tetris[k]] = k;
    deg.push_back(label_degree(s.label[tetris[k]]));
  }
  std::vector<std::size_t> perm;
  std::function<void(int)> post = [&](int v) {
    for (int c : s.children[static_cast<std::size_t>(v)]) post(c);
    if (s.label[static_cast<std::size_t>(v)] != kInput) perm.push_back(slot[static_cast<std::size_t>(v)]);
  };
  post(0);
  return koszul_sign(deg, perm);
}

std::string format_tree(const PlanarTree& t, bool bimodule) {
  if (t.is_unit()) return "1";
  TreeShape s(t);
  std::function<std::string(int)> fmt = [&](int v) -> std::string {
    const Label l = s.label[static_cast<std::size_t>(v)];
    if (l == kInput) return "1";
    const auto& kids = s.children[static_cast<std::size_t>(v)];
    const std::string& name = label_info(l).name;
    bool all_inputs = true;
    for (int c : kids) all_inputs = all_inputs && s.label[static_cast<std::size_t>(c)] == kInput;
    if (all_inputs) return name;
    if (kids.size() == 1) return fmt(kids[0]) + std::string(kDot) + name;
    std::string out = "(";
    for (std::size_t q = 0; q < kids.size(); ++q) {
      if (q) out += kTensor;
      out += fmt(kids[q]);
    }
    return out + ")" + name;
  };
  std::string out = fmt(0);
  if (bimodule && t.arity() == 0 && !has_floor(t)) out += std::string(kDot) + std::string(kRho);
  return out;
}

std::string format_element(const Element& x, bool bimodule) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c0] : x.terms()) {
    mpq_class c = c0 * notation_sign(t);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (c != 1) out += c.get_str() + " ";
    out += format_tree(t, bimodule);
    first = false;
  }
  return out;
}

Element parse_element(std::string_view text) { return Parser(text).parse(); }

}  // namespace huainf
