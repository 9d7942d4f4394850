#include "huainf/scalar.hpp"

#include <stdexcept>

namespace huainf {

Field Field::prime(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

Scalar::Scalar(Field f, long v) : field_(f), value_(v) { reduce(); }

Scalar::Scalar(Field f, const mpq_class& v) : field_(f), value_(v) { reduce(); }

void Scalar::reduce() {
  if (field_.p == 0) {
    value_.canonicalize();
    return;
  }
  mpz_class p(field_.p);
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("denominator vanishes in " + field_.name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  value_ = mpq_class(r);
}

void Scalar::check_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("mixed fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(f, mpq_class(num, den));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("coefficient '") + s + "': " + e.what());
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed coefficient '" + s + "'");
  }
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-value_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  value_ += o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  value_ -= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  value_ *= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  reduce();
  return *this;
}

}  // namespace huainf
