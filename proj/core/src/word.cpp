#include "mzv/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mzv {

bool Word::classical() const {
  return std::all_of(letters.begin(), letters.end(), [](const Letter& l) {
    return (l.sym == 'a' || l.sym == 'b') && l.shift == 0;
  });
}

bool Word::admissible() const {
  return !empty() && letters.front() == A() && letters.back() == B();
}

Word Word::concat(const Word& o) const {
  Word r(*this);
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

Word Word::prefix(long n) const {
  return Word(std::vector<Letter>(letters.begin(), letters.begin() + n));
}

Word Word::suffix_from(long n) const {
  return Word(std::vector<Letter>(letters.begin() + n, letters.end()));
}

Word Word::reversed() const {
  Word r(*this);
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word Word::swapped_ab() const {
  Word r(*this);
  for (auto& l : r.letters) {
    if (l.sym == 'a')
      l.sym = 'b';
    else if (l.sym == 'b')
      l.sym = 'a';
  }
  return r;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::ostringstream os;
  for (const Letter& l : letters) {
    os << l.sym;
    if (l.shift != 0) os << '[' << l.shift << ']';
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  if (text == "1") return Word{};
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(c)))
      throw MzvError(ErrorKind::Parse,
                     "bad letter '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    Letter l{c, 0};
    ++i;
    if (i < text.size() && text[i] == '[') {
      size_t close = text.find(']', i);
      if (close == std::string::npos)
        throw MzvError(ErrorKind::Parse, "unterminated shift at position " +
                                             std::to_string(i));
      std::string num = text.substr(i + 1, close - i - 1);
      try {
        l.shift = std::stol(num);
      } catch (const std::exception&) {
        throw MzvError(ErrorKind::Parse, "bad shift '" + num + "'");
      }
      if (l.shift < 0)
        throw MzvError(ErrorKind::Parse, "negative shift not supported");
      i = close + 1;
    }
    w.letters.push_back(l);
  }
  return w;
}

Word word_from_composition(const Composition& s) {
  Word w;
  for (long p : s.parts) {
    if (p < 1)
      throw MzvError(ErrorKind::NotConvertible, "composition parts must be >= 1");
    for (long j = 0; j < p - 1; ++j) w.letters.push_back(A());
    w.letters.push_back(B());
  }
  return w;
}

Composition composition_from_word(const Word& w) {
  if (!w.classical())
    throw MzvError(ErrorKind::NotConvertible, "word has non-classical letters");
  if (!w.empty() && w.letters.back() != B())
    throw MzvError(ErrorKind::NotConvertible,
                   "word '" + w.to_string() + "' does not end in b");
  Composition c;
  long run_a = 0;
  for (const Letter& l : w.letters) {
    if (l == A()) {
      ++run_a;
    } else {
      c.parts.push_back(run_a + 1);
      run_a = 0;
    }
  }
  return c;
}

Composition dual_composition(const Composition& s) {
  if (!s.admissible())
    throw MzvError(ErrorKind::NotAdmissible,
                   "duality needs s_1 >= 2, got (" + s.to_string() + ")");
  Word w = word_from_composition(s);
  return composition_from_word(w.reversed().swapped_ab());
}

}  // namespace mzv
