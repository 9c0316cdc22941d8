#include "mpoisson/basis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mpoisson {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    throw std::invalid_argument("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto &n : names_) {
    if (n.empty())
      throw std::invalid_argument("empty generator name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate generator name: " + n);
  }
}

Alphabet Alphabet::standard(int n) {
  if (n < 1 || n > 26)
    throw std::invalid_argument("standard alphabet supports 1..26 generators");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

Monomial Monomial::lie(std::vector<int> seq) {
  if (seq.empty())
    throw std::invalid_argument("bracket word needs at least one letter");
  return Monomial(MonKind::lie, std::move(seq));
}

Monomial Monomial::prod(std::vector<int> seq) {
  if (seq.size() < 2 || seq.size() > 3)
    throw std::invalid_argument("product word has 2 or 3 letters");
  return Monomial(MonKind::prod, std::move(seq));
}

Monomial Monomial::lie_times(std::vector<int> bracket, int times) {
  if (bracket.size() < 2)
    throw std::invalid_argument("multiplied bracket word needs at least two letters");
  bracket.push_back(times);
  return Monomial(MonKind::lie_times, std::move(bracket));
}

int Monomial::pb() const {
  switch (kind_) {
  case MonKind::lie:
    return length() - 1;
  case MonKind::prod:
    return 0;
  case MonKind::lie_times:
    return length() - 2;
  }
  return 0;
}

std::span<const int> Monomial::bracket_part() const {
  if (kind_ != MonKind::lie_times)
    throw std::logic_error("bracket_part: not a multiplied bracket word");
  return {seq_.data(), seq_.size() - 1};
}

int Monomial::times_letter() const {
  if (kind_ != MonKind::lie_times)
    throw std::logic_error("times_letter: not a multiplied bracket word");
  return seq_.back();
}

bool Monomial::is_canonical(const Field &field) const {
  const auto &s = seq_;
  const int n = length();
  switch (kind_) {
  case MonKind::lie:
    // [a1,...,an]: a1 > a2 and a2 <= a3 <= ... <= an
    if (n == 1)
      return true;
    if (s[0] <= s[1])
      return false;
    for (int i = 1; i + 1 < n; ++i)
      if (s[i] > s[i + 1])
        return false;
    return true;
  case MonKind::prod:
    if (n < 2 || n > 3)
      return false;
    return std::is_sorted(s.begin(), s.end());
  case MonKind::lie_times: {
    const int bn = n - 1; // bracket length
    if (bn < 2 || s[0] <= s[1])
      return false;
    if (bn == 2)
      return true; // [a1,a2]*a3 with a1 > a2, any a3
    if (field.characteristic() == 2) {
      // bracket length >= 3 with a2 <= ... <= a_n <= multiplied letter
      for (int i = 1; i + 1 < n; ++i)
        if (s[i] > s[i + 1])
          return false;
      return true;
    }
    // char != 2: bracket length exactly 3, a2 < a1 <= a4 and a2 <= a3 < a4
    if (bn != 3)
      return false;
    return s[1] < s[0] && s[0] <= s[3] && s[1] <= s[2] && s[2] < s[3];
  }
  }
  return false;
}

bool Monomial::is_canonical(const Field &field, const Alphabet &alphabet) const {
  for (int a : seq_)
    if (a < 0 || a >= alphabet.size())
      throw std::out_of_range("letter ordinal " + std::to_string(a) +
                              " outside the alphabet");
  return is_canonical(field);
}

std::strong_ordering Monomial::operator<=>(const Monomial &o) const {
  if (auto c = length() <=> o.length(); c != 0)
    return c;
  if (auto c = pb() <=> o.pb(); c != 0)
    return c;
  return seq_ <=> o.seq_;
}

std::string Monomial::str(const Alphabet &alphabet) const {
  std::string out;
  auto bracket = [&](std::span<const int> part) {
    out += '[';
    for (size_t i = 0; i < part.size(); ++i) {
      if (i)
        out += ',';
      out += alphabet.name(part[i]);
    }
    out += ']';
  };
  switch (kind_) {
  case MonKind::lie:
    if (is_letter())
      return alphabet.name(seq_[0]);
    bracket(seq_);
    return out;
  case MonKind::prod:
    for (size_t i = 0; i < seq_.size(); ++i) {
      if (i)
        out += '*';
      out += alphabet.name(seq_[i]);
    }
    return out;
  case MonKind::lie_times:
    bracket(bracket_part());
    out += '*';
    out += alphabet.name(times_letter());
    return out;
  }
  return out;
}

Weight weight_of(const Monomial &m) { return Weight{m.length(), m.pb(), m.seq()}; }

std::vector<int> sorted_tail(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  return letters;
}

namespace {

// All ascending letter sequences of the given length over 0..k-1 with first
// letter >= lo.
void ascending_seqs(int k, int len, int lo, std::vector<int> &cur,
                    const std::function<void(const std::vector<int> &)> &emit) {
  if (len == 0) {
    emit(cur);
    return;
  }
  for (int a = lo; a < k; ++a) {
    cur.push_back(a);
    ascending_seqs(k, len - 1, a, cur, emit);
    cur.pop_back();
  }
}

} // namespace

std::vector<Monomial> enumerate_canonical(const Alphabet &alphabet, const Field &field,
                                          int max_len) {
  const int k = alphabet.size();
  std::vector<Monomial> out;
  std::vector<int> cur;
  auto seqs = [&](int len, auto &&emit) {
    ascending_seqs(k, len, 0, cur, emit);
  };

  // bare letters and bracket words [a1, tail] with a1 > tail[0]
  for (int a = 0; a < k; ++a)
    out.push_back(Monomial::letter(a));
  for (int n = 2; n <= max_len; ++n) {
    seqs(n - 1, [&](const std::vector<int> &tail) {
      for (int a1 = tail[0] + 1; a1 < k; ++a1) {
        std::vector<int> s{a1};
        s.insert(s.end(), tail.begin(), tail.end());
        out.push_back(Monomial::lie(std::move(s)));
      }
    });
  }

  // products of 2 or 3 ascending letters
  for (int n = 2; n <= std::min(3, max_len); ++n)
    seqs(n, [&](const std::vector<int> &s) { out.push_back(Monomial::prod(s)); });

  // multiplied bracket words, by total length
  for (int n = 3; n <= max_len; ++n) {
    if (n == 3) {
      // [a1,a2]*a3 with a1 > a2, a3 arbitrary
      for (int a2 = 0; a2 < k; ++a2)
        for (int a1 = a2 + 1; a1 < k; ++a1)
          for (int a3 = 0; a3 < k; ++a3)
            out.push_back(Monomial::lie_times({a1, a2}, a3));
    } else if (field.characteristic() == 2) {
      // [a1,...,a_{n-1}]*a_n with a1 > a2 <= ... <= a_n
      seqs(n - 1, [&](const std::vector<int> &tail) {
        for (int a1 = tail[0] + 1; a1 < k; ++a1) {
          std::vector<int> br{a1};
          br.insert(br.end(), tail.begin(), tail.end() - 1);
          out.push_back(Monomial::lie_times(std::move(br), tail.back()));
        }
      });
    } else if (n == 4) {
      // [a1,a2,a3]*a4 with a2 < a1 <= a4, a2 <= a3 < a4
      for (int a1 = 0; a1 < k; ++a1)
        for (int a2 = 0; a2 < a1; ++a2)
          for (int a3 = a2; a3 < k; ++a3)
            for (int a4 = std::max(a1, a3 + 1); a4 < k; ++a4)
              out.push_back(Monomial::lie_times({a1, a2, a3}, a4));
    }
  }

  std::erase_if(out, [&](const Monomial &m) { return m.length() > max_len; });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace mpoisson
