#include "mpoisson/field.hpp"

#include <stdexcept>

namespace mpoisson {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31))
    throw std::invalid_argument("modulus too large (must fit in 31 bits)");
  return Field(FieldKind::prime_field, p);
}

std::string Field::name() const {
  return kind_ == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

void Field::check(const Scalar &a) const {
  if (a.is_rational_repr() != (kind_ == FieldKind::rationals))
    throw std::logic_error("scalar representation does not match the field");
}

Scalar Field::zero() const {
  return kind_ == FieldKind::rationals ? Scalar::rational(0) : Scalar::modular(0);
}

Scalar Field::one() const {
  return kind_ == FieldKind::rationals ? Scalar::rational(1) : Scalar::modular(1);
}

Scalar Field::minus_one() const {
  return kind_ == FieldKind::rationals ? Scalar::rational(-1) : Scalar::modular(p_ - 1);
}

Scalar Field::from_int(long n) const { return from_integer(mpz_class(n)); }

Scalar Field::from_integer(const mpz_class &n) const {
  if (kind_ == FieldKind::rationals)
    return Scalar::rational(mpq_class(n));
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0)
    r += mpz_class(static_cast<unsigned long>(p_));
  return Scalar::modular(r.get_ui());
}

Scalar Field::from_fraction(const mpz_class &num, const mpz_class &den) const {
  if (den == 0)
    throw std::domain_error("zero denominator");
  if (kind_ != FieldKind::rationals)
    throw std::domain_error("fractional coefficients require the rationals");
  return Scalar::rational(mpq_class(num, den));
}

Scalar Field::add(const Scalar &a, const Scalar &b) const {
  check(a), check(b);
  if (kind_ == FieldKind::rationals)
    return Scalar::rational(a.rat() + b.rat());
  std::uint64_t s = a.residue() + b.residue();
  return Scalar::modular(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar &a) const {
  check(a);
  if (kind_ == FieldKind::rationals)
    return Scalar::rational(-a.rat());
  return Scalar::modular(a.residue() == 0 ? 0 : p_ - a.residue());
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const {
  check(a), check(b);
  if (kind_ == FieldKind::rationals)
    return Scalar::rational(a.rat() * b.rat());
  return Scalar::modular((a.residue() * b.residue()) % p_);
}

Scalar Field::inv(const Scalar &a) const {
  check(a);
  if (is_zero(a))
    throw std::domain_error("inverse of zero");
  if (kind_ == FieldKind::rationals)
    return Scalar::rational(1 / a.rat());
  // extended Euclid on (r, p); p prime so gcd = 1
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.residue());
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0)
    t += static_cast<std::int64_t>(p_);
  return Scalar::modular(static_cast<std::uint64_t>(t));
}

bool Field::is_zero(const Scalar &a) const {
  check(a);
  return kind_ == FieldKind::rationals ? a.rat() == 0 : a.residue() == 0;
}

bool Field::is_one(const Scalar &a) const {
  check(a);
  return kind_ == FieldKind::rationals ? a.rat() == 1 : a.residue() == 1;
}

std::string Field::to_string(const Scalar &a) const {
  check(a);
  return kind_ == FieldKind::rationals ? a.rat().get_str() : std::to_string(a.residue());
}

} // namespace mpoisson
