#include "mpoisson/poly.hpp"

#include <stdexcept>

namespace mpoisson {

const Monomial &Poly::leading_monomial() const {
  if (terms_.empty())
    throw std::domain_error("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Scalar &Poly::leading_coeff() const {
  if (terms_.empty())
    throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

Scalar Poly::coeff(const Monomial &m, const Field &field) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field.zero() : it->second;
}

void Poly::add_term(const Monomial &m, const Scalar &c, const Field &field) {
  if (field.is_zero(c))
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (field.is_zero(it->second))
      terms_.erase(it);
  }
}

std::string Poly::str(const Alphabet &alphabet, const Field &field) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Scalar shown = c;
    if (first) {
      // leading sign folds into the first coefficient
      if (field.kind() == FieldKind::rationals && c.rat() < 0) {
        out += "-";
        shown = field.neg(c);
      }
    } else {
      if (field.kind() == FieldKind::rationals && c.rat() < 0) {
        out += " - ";
        shown = field.neg(c);
      } else {
        out += " + ";
      }
    }
    if (!field.is_one(shown))
      out += field.to_string(shown) + "*";
    out += m.str(alphabet);
    first = false;
  }
  return out;
}

Poly poly_add(const Poly &f, const Poly &g, const Field &field) {
  Poly r = f;
  for (const auto &[m, c] : g.terms())
    r.add_term(m, c, field);
  return r;
}

Poly poly_sub(const Poly &f, const Poly &g, const Field &field) {
  Poly r = f;
  for (const auto &[m, c] : g.terms())
    r.add_term(m, field.neg(c), field);
  return r;
}

Poly poly_neg(const Poly &f, const Field &field) {
  return poly_scale(field.minus_one(), f, field);
}

Poly poly_scale(const Scalar &c, const Poly &f, const Field &field) {
  Poly r;
  if (field.is_zero(c))
    return r;
  for (const auto &[m, a] : f.terms())
    r.add_term(m, field.mul(c, a), field);
  return r;
}

Poly make_monic(const Poly &f, const Field &field) {
  return poly_scale(field.inv(f.leading_coeff()), f, field);
}

Poly truncate_by_length(const Poly &f, int max_len, const Field &field) {
  Poly r;
  for (const auto &[m, c] : f.terms())
    if (m.length() <= max_len)
      r.add_term(m, c, field);
  return r;
}

} // namespace mpoisson
