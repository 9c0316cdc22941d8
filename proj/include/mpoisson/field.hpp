#ifndef MPOISSON_FIELD_HPP
#define MPOISSON_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace mpoisson {

/// An exact field element: an arbitrary-precision rational, or a residue
/// in [0, p) when the owning field is GF(p). Scalars are immutable values;
/// arithmetic goes through Field so the representation always matches the
/// ambient field.
class Scalar {
public:
  Scalar() : v_(mpq_class(0)) {}

  bool is_rational_repr() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class &rat() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

  bool operator==(const Scalar &o) const { return v_ == o.v_; }
  bool operator!=(const Scalar &o) const { return !(*this == o); }

  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }
  static Scalar modular(std::uint64_t r) { return Scalar(r); }

private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(std::uint64_t r) : v_(r) {}
  std::variant<mpq_class, std::uint64_t> v_;
};

enum class FieldKind { rationals, prime_field };

/// Coefficient field: the rationals, or GF(p) for a prime p. Carries the
/// characteristic (0 for the rationals) and performs all scalar arithmetic.
/// Construction rejects composite or zero moduli.
class Field {
public:
  static Field rationals();
  static Field prime_field(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool operator==(const Field &o) const { return kind_ == o.kind_ && p_ == o.p_; }

  /// "Q" or "GF(p)", the spelling used in presentation files.
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar minus_one() const;
  Scalar from_int(long n) const;
  Scalar from_integer(const mpz_class &n) const;
  /// Fraction literals are only meaningful over the rationals; throws for GF(p).
  Scalar from_fraction(const mpz_class &num, const mpz_class &den) const;

  Scalar add(const Scalar &a, const Scalar &b) const;
  Scalar sub(const Scalar &a, const Scalar &b) const;
  Scalar neg(const Scalar &a) const;
  Scalar mul(const Scalar &a, const Scalar &b) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar &a) const;
  Scalar div(const Scalar &a, const Scalar &b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar &a) const;
  bool is_one(const Scalar &a) const;
  std::string to_string(const Scalar &a) const;

private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  void check(const Scalar &a) const;

  FieldKind kind_;
  std::uint64_t p_; // 0 for the rationals
};

bool is_prime_u64(std::uint64_t n);

} // namespace mpoisson

#endif
