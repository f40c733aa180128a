#include "mzv/composition.hpp"

#include <sstream>

namespace mzv {

GaussRat gauss_pow(const GaussRat& base, unsigned long e) {
  GaussRat r(1);
  GaussRat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string rat_to_string(const Rat& r) { return r.str(); }

std::string gauss_to_string(const GaussRat& g) {
  if (g.im == 0) return rat_to_string(g.re);
  std::ostringstream os;
  os << "(" << rat_to_string(g.re);
  if (g.im > 0)
    os << "+" << rat_to_string(g.im) << "*i)";
  else
    os << "-" << rat_to_string(-g.im) << "*i)";
  return os.str();
}

Rat parse_rational(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw MzvError(ErrorKind::Parse, "empty rational");
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw MzvError(ErrorKind::Parse, "bad rational: '" + text + "'");
  }
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

Composition Composition::parse(const std::string& text) {
  Composition c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw MzvError(ErrorKind::Parse, "empty part in '" + text + "'");
    long v = 0;
    try {
      v = std::stol(cur);
    } catch (const std::exception&) {
      throw MzvError(ErrorKind::Parse, "bad integer '" + cur + "'");
    }
    if (v < 1) throw MzvError(ErrorKind::Parse, "composition parts must be >= 1");
    c.parts.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch == ' ') {
      continue;
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) flush();
  return c;
}

std::string SignedComposition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ",";
    os << (terms[i].sigma < 0 ? -terms[i].s : terms[i].s);
  }
  return os.str();
}

SignedComposition SignedComposition::parse(const std::string& text, const Rat& x) {
  SignedComposition sc;
  sc.x = x;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw MzvError(ErrorKind::Parse, "empty part in '" + text + "'");
    long v = 0;
    try {
      v = std::stol(cur);
    } catch (const std::exception&) {
      throw MzvError(ErrorKind::Parse, "bad integer '" + cur + "'");
    }
    if (v == 0) throw MzvError(ErrorKind::Parse, "argument 0 not allowed");
    sc.terms.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch == ' ') {
      continue;
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) flush();
  return sc;
}

SignedComposition SignedComposition::from_composition(const Composition& c, const Rat& x) {
  SignedComposition sc;
  sc.x = x;
  for (long s : c.parts) sc.terms.push_back({s, 1});
  return sc;
}

bool SignedComposition::admissible() const {
  if (x < 0 || x > 1) return false;
  if (terms.empty()) return true;
  if (x < 1) return true;
  return !(terms[0].s == 1 && terms[0].sigma == 1);
}

std::vector<Composition> stuffle(const Composition& u, const Composition& v) {
  if (u.parts.empty()) return {v};
  if (v.parts.empty()) return {u};
  long s = u.parts.front();
  long t = v.parts.front();
  Composition ur{std::vector<long>(u.parts.begin() + 1, u.parts.end())};
  Composition vr{std::vector<long>(v.parts.begin() + 1, v.parts.end())};
  std::vector<Composition> out;
  auto prepend = [&out](long head, std::vector<Composition> tails) {
    for (auto& w : tails) {
      Composition c;
      c.parts.reserve(w.parts.size() + 1);
      c.parts.push_back(head);
      c.parts.insert(c.parts.end(), w.parts.begin(), w.parts.end());
      out.push_back(std::move(c));
    }
  };
  prepend(s, stuffle(ur, v));
  prepend(t, stuffle(u, vr));
  prepend(s + t, stuffle(ur, vr));
  return out;
}

std::vector<Composition> admissible_compositions_of_weight(long weight) {
  std::vector<Composition> out;
  if (weight < 2) return out;
  std::vector<long> cur;
  // first part >= 2, remaining parts >= 1
  auto rec = [&](auto&& self, long rest, bool first) -> void {
    if (rest == 0) {
      if (!cur.empty()) out.push_back(Composition{cur});
      return;
    }
    long lo = first ? 2 : 1;
    for (long p = lo; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p, false);
      cur.pop_back();
    }
  };
  rec(rec, weight, true);
  return out;
}

std::vector<Composition> admissible_compositions_of_weight_depth(long weight, long depth) {
  std::vector<Composition> out;
  for (auto& c : admissible_compositions_of_weight(weight))
    if (static_cast<long>(c.parts.size()) == depth) out.push_back(c);
  return out;
}

}  // namespace mzv
