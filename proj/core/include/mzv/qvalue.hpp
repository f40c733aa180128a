#ifndef MZV_QVALUE_HPP
#define MZV_QVALUE_HPP

#include <vector>

#include "mzv/ncpoly.hpp"
#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// Monomial q-difference 1-form f(t) d_q t with f(t) = t^p, carried at a
/// power of the automorphism eta.
struct MonomialQForm {
  Rat exponent;  // p >= 0
  long shift = 0;
};

/// In word form, letters map to monomial exponents by alphabet position:
/// 'a' is t^0, 'b' is t^1, 'c' is t^2, ...; the letter shift is the eta
/// power.
MonomialQForm qform_of_letter(const Letter& l);

/// Exact value of the iterated Jackson q-integral of a word of monomial
/// forms from 0 to x:
///   (1-q)^k q^{sum j_r c_r} x^{sum c_r} prod_i (1 - q^{c_i+...+c_k})^{-1}
/// with c_r = p_r + 1.  Requires q in (0,1); all exponents must come out
/// integral.
Rat q_word_value_exact(const Word& w, const Rat& x, const Rat& q);

/// Linear extension to noncommutative polynomials (coefficients must be
/// real).
Rat q_word_value_exact(const NcPoly& p, const Rat& x, const Rat& q);

/// Value of the classical iterated integral the q-integral tends to:
///   x^{sum c_i} prod_i (c_i + ... + c_k)^{-1}.
Rat classical_word_value(const Word& w, const Rat& x);

/// q-integral values along a sequence of q -> 1^-; they approach the
/// classical value with error O(1-q).
std::vector<Rat> q_limit_check(const Word& w, const Rat& x,
                               const std::vector<Rat>& qs);

}  // namespace mzv

#endif
