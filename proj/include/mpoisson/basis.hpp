#ifndef MPOISSON_BASIS_HPP
#define MPOISSON_BASIS_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpoisson/field.hpp"

namespace mpoisson {

/// Finite ordered list of generator names. The position in the list is the
/// letter's ordinal, and ordinals define the well-order used everywhere;
/// names matter only for I/O.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);
  /// "a", "b", "c", ... for quick construction in tests and the axiom command.
  static Alphabet standard(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string &name(int ordinal) const { return names_.at(ordinal); }
  std::optional<int> find(std::string_view name) const;

  bool operator==(const Alphabet &o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

enum class MonKind {
  lie,       // left-normed bracket word [a1,...,an]; n = 1 is a bare letter
  prod,      // commutative product a1*a2 or a1*a2*a3, letters ascending
  lie_times, // bracket word times one letter: [a1,...,a_{n-1}]*a_n
};

/// A canonical basis monomial of the free metabelian Poisson algebra.
///
/// The stored letter sequence is the written order: for lie it is the bracket
/// entries, for prod the sorted factors, for lie_times the bracket entries
/// followed by the multiplied letter. Which shapes are canonical depends on
/// the field characteristic (only char = 2 differs); see is_canonical().
class Monomial {
public:
  static Monomial letter(int a) { return Monomial(MonKind::lie, {a}); }
  static Monomial lie(std::vector<int> seq);
  static Monomial prod(std::vector<int> seq);
  static Monomial lie_times(std::vector<int> bracket, int times);

  MonKind kind() const { return kind_; }
  int length() const { return static_cast<int>(seq_.size()); }
  /// Number of Poisson brackets in the written form.
  int pb() const;
  const std::vector<int> &seq() const { return seq_; }
  int head() const { return seq_.front(); }
  bool is_letter() const { return kind_ == MonKind::lie && seq_.size() == 1; }

  /// For lie_times only: the bracket part and the multiplied letter.
  std::span<const int> bracket_part() const;
  int times_letter() const;

  /// Canonicity under the characteristic-dependent shape constraints.
  /// Letter ordinals must already be valid for the ambient alphabet.
  bool is_canonical(const Field &field) const;
  /// Range-checks ordinals against the alphabet (throws std::out_of_range),
  /// then applies the shape constraints.
  bool is_canonical(const Field &field, const Alphabet &alphabet) const;

  std::strong_ordering operator<=>(const Monomial &o) const;
  bool operator==(const Monomial &o) const = default;

  std::string str(const Alphabet &alphabet) const;

private:
  Monomial(MonKind k, std::vector<int> seq) : kind_(k), seq_(std::move(seq)) {}

  MonKind kind_;
  std::vector<int> seq_;
};

/// wt(W) = (length, bracket count, letter sequence in written order).
/// Monomials compare lexicographically by this triple; the order is total
/// and injective on canonical monomials.
struct Weight {
  int length = 0;
  int pb = 0;
  std::vector<int> seq;

  std::strong_ordering operator<=>(const Weight &o) const = default;
};

Weight weight_of(const Monomial &m);

/// Ascending reordering by ordinal (the overarrow in the written convention).
std::vector<int> sorted_tail(std::vector<int> letters);

/// All canonical monomials of length <= max_len, ascending in the weight
/// order. Exists for the oracle, enumeration-based tests and lrr listings.
std::vector<Monomial> enumerate_canonical(const Alphabet &alphabet, const Field &field,
                                          int max_len);

struct MonomialAsc {
  bool operator()(const Monomial &a, const Monomial &b) const { return a < b; }
};
struct MonomialDesc {
  bool operator()(const Monomial &a, const Monomial &b) const { return b < a; }
};

} // namespace mpoisson

#endif
