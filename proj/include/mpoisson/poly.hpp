#ifndef MPOISSON_POLY_HPP
#define MPOISSON_POLY_HPP

#include <map>
#include <string>

#include "mpoisson/basis.hpp"
#include "mpoisson/field.hpp"

namespace mpoisson {

/// Finite linear combination of canonical monomials with nonzero exact
/// coefficients, iterated in strictly descending weight order. The zero
/// polynomial is the empty term map.
class Poly {
public:
  using TermMap = std::map<Monomial, Scalar, MonomialDesc>;

  Poly() = default;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  /// Greatest-weight term; throws std::domain_error on the zero polynomial.
  const Monomial &leading_monomial() const;
  const Scalar &leading_coeff() const;

  /// Coefficient of m (field zero if absent).
  Scalar coeff(const Monomial &m, const Field &field) const;

  /// Adds c*m, erasing the term if the sum cancels.
  void add_term(const Monomial &m, const Scalar &c, const Field &field);

  bool operator==(const Poly &o) const { return terms_ == o.terms_; }

  std::string str(const Alphabet &alphabet, const Field &field) const;

private:
  TermMap terms_;
};

Poly poly_add(const Poly &f, const Poly &g, const Field &field);
Poly poly_sub(const Poly &f, const Poly &g, const Field &field);
Poly poly_neg(const Poly &f, const Field &field);
Poly poly_scale(const Scalar &c, const Poly &f, const Field &field);
/// Scales by the inverse of the leading coefficient; throws on zero input.
Poly make_monic(const Poly &f, const Field &field);
/// Drops every term of length > max_len (exact under the length grading).
Poly truncate_by_length(const Poly &f, int max_len, const Field &field);

} // namespace mpoisson

#endif
