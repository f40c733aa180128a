#ifndef MZV_WORD_HPP
#define MZV_WORD_HPP

#include <compare>
#include <string>
#include <vector>

#include "mzv/composition.hpp"

namespace mzv {

/// A letter of the (possibly shifted) alphabet.  The classical alphabet is
/// {a, b} with a = dt/t and b = dt/(1-t), always at shift 0; q-words carry
/// the number of times the automorphism eta has been applied.
struct Letter {
  char sym;
  long shift = 0;

  auto operator<=>(const Letter&) const = default;
};

inline Letter A() { return Letter{'a', 0}; }
inline Letter B() { return Letter{'b', 0}; }

/// A word over the alphabet; the empty word is the monoid identity 1.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  long size() const { return static_cast<long>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool classical() const;  // every letter in {a,b} at shift 0

  /// Nonempty, starts with a, ends with b: convergent at x = 1.
  bool admissible() const;

  Word concat(const Word& o) const;
  Word prefix(long n) const;
  Word suffix_from(long n) const;
  Word reversed() const;
  /// a <-> b on classical letters.
  Word swapped_ab() const;

  auto operator<=>(const Word&) const = default;

  /// Text form: "aabb", shifted letters as "a[2]"; the empty word is "1".
  std::string to_string() const;
  static Word parse(const std::string& text);
};

/// Canonical term order: length first, then lexicographic on (symbol, shift).
struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.letters.size() != y.letters.size())
      return x.letters.size() < y.letters.size();
    return x.letters < y.letters;
  }
};

/// (s_1,...,s_k)  ->  a^{s_1 - 1} b ... a^{s_k - 1} b.
Word word_from_composition(const Composition& s);

/// Inverse of word_from_composition.  The word must be classical and end
/// in b; otherwise throws ErrorKind::NotConvertible.
Composition composition_from_word(const Word& w);

/// Duality: reverse the word and swap a <-> b.  Requires s_1 >= 2; throws
/// ErrorKind::NotAdmissible otherwise.  An involution preserving weight.
Composition dual_composition(const Composition& s);

}  // namespace mzv

#endif
