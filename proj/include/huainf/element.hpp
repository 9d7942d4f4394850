#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>

#include "huainf/tree.hpp"

namespace huainf {

// Finite linear combination of trees of one arity with exact rational
// coefficients. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<PlanarTree, mpq_class>;

  Element() = default;
  explicit Element(int arity) : arity_(arity) {}
  Element(const PlanarTree& t, const mpq_class& c = 1);

  int arity() const { return arity_; }
  // Degree of the (homogeneous) element; 0 for the zero element.
  int degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  mpq_class coefficient(const PlanarTree& t) const;

  // Throws std::invalid_argument on an arity mismatch.
  void add(const PlanarTree& t, const mpq_class& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const mpq_class& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const mpq_class& c, Element a) { return a *= c; }
  Element operator-() const { return mpq_class(-1) * *this; }

  // Linear extension of a map on trees.
  Element map_terms(int arity, const std::function<Element(const PlanarTree&)>& f) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.arity_ == b.arity_);
  }

 private:
  int arity_ = 0;
  Terms terms_;
};

}  // namespace huainf
