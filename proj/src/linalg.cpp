#include "huainf/linalg.hpp"

#include <stdexcept>
#include <unordered_map>
#include <variant>

namespace huainf {
namespace {

struct RationalOps {
  using T = mpq_class;
  T from(const mpq_class& q) const { return q; }
  bool zero(const T& a) const { return a == 0; }
  T sub_mul(const T& a, const T& c, const T& b) const { return a - c * b; }  // a - c*b
  T inv(const T& a) const { return 1 / a; }
  T mul(const T& a, const T& b) const { return a * b; }
};

struct ModOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T from(const mpq_class& q) const { return Scalar(Field{static_cast<std::uint32_t>(p)}, q).value().get_num().get_ui(); }
  bool zero(T a) const { return a == 0; }
  T sub_mul(T a, T c, T b) const { return (a + p - (c * b) % p) % p; }
  T inv(T a) const {
    // Fermat
    T r = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
    }
    return r;
  }
  T mul(T a, T b) const { return a * b % p; }
};

template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;
  using Row = std::vector<std::pair<int, T>>;
  explicit Echelon(Ops ops) : ops_(ops) {}

  Row convert(const SparseVector& v) const {
    Row r;
    for (const auto& [k, q] : v) {
      T x = ops_.from(q);
      if (!ops_.zero(x)) r.emplace_back(k, x);
    }
    return r;
  }

  // Reduces until the leading column has no pivot; returns the residue.
  Row reduce(Row v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      const Row& p = it->second;
      const T c = v.front().second;
      Row out;
      out.reserve(v.size() + p.size());
      std::size_t a = 0, b = 0;
      while (a < v.size() || b < p.size()) {
        if (b == p.size() || (a < v.size() && v[a].first < p[b].first)) {
          out.push_back(v[a++]);
        } else if (a == v.size() || p[b].first < v[a].first) {
          out.emplace_back(p[b].first, ops_.sub_mul(T(0), c, p[b].second));
          ++b;
        } else {
          T x = ops_.sub_mul(v[a].second, c, p[b].second);
          if (!ops_.zero(x)) out.emplace_back(v[a].first, x);
          ++a;
          ++b;
        }
      }
      v.swap(out);
    }
    return v;
  }

  bool insert(const SparseVector& row) {
    Row v = reduce(convert(row));
    if (v.empty()) return false;
    const T s = ops_.inv(v.front().second);
    for (auto& e : v) e.second = ops_.mul(e.second, s);
    const int lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(const SparseVector& row) const { return reduce(convert(row)).empty(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  Ops ops_;
  std::unordered_map<int, Row> pivots_;
};

}  // namespace

struct RowEchelon::Impl {
  std::variant<Echelon<RationalOps>, Echelon<ModOps>> e;
};

RowEchelon::RowEchelon(Field f)
    : impl_(f.is_rational() ? std::make_unique<Impl>(Impl{Echelon<RationalOps>(RationalOps{})})
                            : std::make_unique<Impl>(Impl{Echelon<ModOps>(ModOps{f.p})})) {}
RowEchelon::~RowEchelon() = default;
RowEchelon::RowEchelon(RowEchelon&&) noexcept = default;
RowEchelon& RowEchelon::operator=(RowEchelon&&) noexcept = default;

bool RowEchelon::insert(const SparseVector& row) {
  return std::visit([&](auto& e) { return e.insert(row); }, impl_->e);
}
bool RowEchelon::contains(const SparseVector& row) const {
  return std::visit([&](const auto& e) { return e.contains(row); }, impl_->e);
}
std::size_t RowEchelon::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->e);
}

SparseVector make_sparse(const std::map<int, mpq_class>& entries) {
  SparseVector v;
  for (const auto& [k, q] : entries)
    if (q != 0) v.emplace_back(k, q);
  return v;
}

std::size_t rank(const std::vector<SparseVector>& rows, Field f) {
  RowEchelon e(f);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace huainf
