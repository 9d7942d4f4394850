#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace huainf {

// Ground field for evaluation and linear algebra: exact rationals (p == 0)
// or the prime field F_p.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);  // throws std::invalid_argument unless p is prime

  bool is_rational() const { return p == 0; }
  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;
};

// Exact scalar in a Field. Values in F_p are kept as canonical
// representatives 0..p-1.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  // Parses "3", "-2/5". Throws std::invalid_argument on malformed input or a
  // denominator divisible by p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void reduce();
  void check_field(const Scalar& o) const;

  Field field_{};
  mpq_class value_{0};
};

}  // namespace huainf
