#ifndef MZV_NCPOLY_HPP
#define MZV_NCPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "mzv/word.hpp"

namespace mzv {

/// Noncommutative polynomial: finitely supported map word -> coefficient
/// over the Gaussian rationals.  Zero coefficients are never stored; terms
/// iterate in the canonical (length, lexicographic) order.
class NcPoly {
 public:
  using Terms = std::map<Word, GaussRat, WordLess>;

  NcPoly() = default;
  static NcPoly zero() { return NcPoly(); }
  static NcPoly one() { return monomial(Word{}); }
  static NcPoly monomial(const Word& w, const GaussRat& c = GaussRat(1));

  bool is_zero() const { return terms_.empty(); }
  long term_count() const { return static_cast<long>(terms_.size()); }
  const Terms& terms() const { return terms_; }
  GaussRat coeff(const Word& w) const;
  /// Sum of all coefficients (the "mass"; counts shuffle multiplicity).
  GaussRat mass() const;

  void add_term(const Word& w, const GaussRat& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly operator-() const;
  /// Concatenation product, extended bilinearly.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly scaled(const GaussRat& c) const;

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Shuffle product by the left recursion
///   1 sh w = w sh 1 = w,   au sh bv = a(u sh bv) + b(au sh v),
/// extended bilinearly.
NcPoly shuffle(const Word& u, const Word& v);
NcPoly shuffle(const NcPoly& u, const NcPoly& v);

/// Shuffle product by the mirrored recursion on trailing letters
///   ua sh vb = (u sh vb)a + (ua sh v)b; agrees with shuffle().
NcPoly shuffle_right(const Word& u, const Word& v);

/// q-shuffle: au qsh bv = a(u qsh bv) + b(eta(au) qsh v), where eta bumps
/// every shift by one.  Always splits on leading letters, left operand
/// first, so the expansion is canonical.
NcPoly qshuffle(const Word& u, const Word& v);
NcPoly qshuffle(const NcPoly& u, const NcPoly& v);

Word eta_shift(const Word& w, long j);
NcPoly eta_shift(const NcPoly& p, long j);

/// Sum of the distinct words of (ab)^n sh (ab)^{m-n} in which the subword
/// a^2 appears exactly n times; zero unless m >= 2n >= 0.  The number of
/// words is m! / ((2n)! (m-2n)!).
NcPoly t_word_sum(long m, long n);

/// Insertion word of a (2n+1)-tuple (m_0,...,m_2n) of nonnegative integers:
///   (ab)^{m_0} prod_k (a^2 b)(ab)^{m_{2k-1}} b (ab)^{m_{2k}}.
/// Throws ErrorKind::BadArity on even-length input.
Word phi_insertion(const std::vector<long>& mvec);

/// Word coefficients of A(z) = sum (z^2 ab)^n (1 + za) through degree N.
std::vector<NcPoly> broadhurst_a_words(long n_max);
/// Word coefficients of M(z) = sum (z^4 a^2b^2)^n (1 + za + z^2a^2 + z^3a^2b).
std::vector<NcPoly> broadhurst_m_words(long n_max);

}  // namespace mzv

#endif
