#include "mzv/ncpoly.hpp"

#include <sstream>

namespace mzv {

NcPoly NcPoly::monomial(const Word& w, const GaussRat& c) {
  NcPoly p;
  if (!c.is_zero()) p.terms_[w] = c;
  return p;
}

GaussRat NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat NcPoly::mass() const {
  GaussRat m;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

void NcPoly::add_term(const Word& w, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r;
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(wa.concat(wb), ca * cb);
  return r;
}

NcPoly NcPoly::scaled(const GaussRat& c) const {
  NcPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, t] : terms_) r.terms_[w] = t * c;
  return r;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    GaussRat cc = c;
    bool neg = cc.is_real() && cc.re < 0;
    if (first) {
      if (neg) {
        os << "-";
        cc = -cc;
      }
    } else {
      if (neg) {
        os << " - ";
        cc = -cc;
      } else {
        os << " + ";
      }
    }
    first = false;
    if (cc == GaussRat(1)) {
      os << w.to_string();
    } else {
      os << gauss_to_string(cc) << "*" << w.to_string();
    }
  }
  return os.str();
}

namespace {

NcPoly prepend(const Letter& l, const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word pw;
    pw.letters.reserve(w.letters.size() + 1);
    pw.letters.push_back(l);
    pw.letters.insert(pw.letters.end(), w.letters.begin(), w.letters.end());
    r.add_term(pw, c);
  }
  return r;
}

NcPoly append(const NcPoly& p, const Letter& l) {
  NcPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word pw = w;
    pw.letters.push_back(l);
    r.add_term(pw, c);
  }
  return r;
}

}  // namespace

NcPoly shuffle(const Word& u, const Word& v) {
  if (u.empty()) return NcPoly::monomial(v);
  if (v.empty()) return NcPoly::monomial(u);
  NcPoly r = prepend(u.letters.front(), shuffle(u.suffix_from(1), v));
  r += prepend(v.letters.front(), shuffle(u, v.suffix_from(1)));
  return r;
}

NcPoly shuffle(const NcPoly& u, const NcPoly& v) {
  NcPoly r;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) r += shuffle(wu, wv).scaled(cu * cv);
  return r;
}

NcPoly shuffle_right(const Word& u, const Word& v) {
  if (u.empty()) return NcPoly::monomial(v);
  if (v.empty()) return NcPoly::monomial(u);
  NcPoly r = append(shuffle_right(u.prefix(u.size() - 1), v), u.letters.back());
  r += append(shuffle_right(u, v.prefix(v.size() - 1)), v.letters.back());
  return r;
}

Word eta_shift(const Word& w, long j) {
  Word r = w;
  for (auto& l : r.letters) l.shift += j;
  return r;
}

NcPoly eta_shift(const NcPoly& p, long j) {
  NcPoly r;
  for (const auto& [w, c] : p.terms()) r.add_term(eta_shift(w, j), c);
  return r;
}

NcPoly qshuffle(const Word& u, const Word& v) {
  if (u.empty()) return NcPoly::monomial(v);
  if (v.empty()) return NcPoly::monomial(u);
  NcPoly r = prepend(u.letters.front(), qshuffle(u.suffix_from(1), v));
  r += prepend(v.letters.front(), qshuffle(eta_shift(u, 1), v.suffix_from(1)));
  return r;
}

NcPoly qshuffle(const NcPoly& u, const NcPoly& v) {
  NcPoly r;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) r += qshuffle(wu, wv).scaled(cu * cv);
  return r;
}

namespace {

Word ab_power(long n) {
  Word w;
  for (long i = 0; i < n; ++i) {
    w.letters.push_back(A());
    w.letters.push_back(B());
  }
  return w;
}

long count_aa(const Word& w) {
  long n = 0;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i] == A() && w.letters[i + 1] == A()) ++n;
  return n;
}

}  // namespace

NcPoly t_word_sum(long m, long n) {
  if (n < 0 || m < 2 * n) return NcPoly::zero();
  NcPoly sh = shuffle(ab_power(n), ab_power(m - n));
  NcPoly r;
  for (const auto& [w, c] : sh.terms())
    if (count_aa(w) == n) r.add_term(w, GaussRat(1));
  return r;
}

Word phi_insertion(const std::vector<long>& mvec) {
  if (mvec.size() % 2 == 0)
    throw MzvError(ErrorKind::BadArity, "phi insertion needs 2n+1 entries");
  for (long v : mvec)
    if (v < 0) throw MzvError(ErrorKind::BadArity, "entries must be >= 0");
  long n = (static_cast<long>(mvec.size()) - 1) / 2;
  Word w = ab_power(mvec[0]);
  for (long k = 1; k <= n; ++k) {
    w.letters.push_back(A());
    w.letters.push_back(A());
    w.letters.push_back(B());
    w = w.concat(ab_power(mvec[2 * k - 1]));
    w.letters.push_back(B());
    w = w.concat(ab_power(mvec[2 * k]));
  }
  return w;
}

std::vector<NcPoly> broadhurst_a_words(long n_max) {
  // z^{2n} -> (ab)^n,  z^{2n+1} -> (ab)^n a
  std::vector<NcPoly> out(n_max + 1);
  for (long d = 0; d <= n_max; ++d) {
    Word w = ab_power(d / 2);
    if (d % 2 == 1) w.letters.push_back(A());
    out[d] = NcPoly::monomial(w);
  }
  return out;
}

std::vector<NcPoly> broadhurst_m_words(long n_max) {
  // z^{4n+r} -> (a^2 b^2)^n x_r with x_0 = 1, x_1 = a, x_2 = a^2, x_3 = a^2 b
  std::vector<NcPoly> out(n_max + 1);
  for (long d = 0; d <= n_max; ++d) {
    Word w;
    for (long i = 0; i < d / 4; ++i) {
      w.letters.insert(w.letters.end(), {A(), A(), B(), B()});
    }
    switch (d % 4) {
      case 1:
        w.letters.push_back(A());
        break;
      case 2:
        w.letters.insert(w.letters.end(), {A(), A()});
        break;
      case 3:
        w.letters.insert(w.letters.end(), {A(), A(), B()});
        break;
      default:
        break;
    }
    out[d] = NcPoly::monomial(w);
  }
  return out;
}

}  // namespace mzv
