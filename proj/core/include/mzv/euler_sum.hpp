#ifndef MZV_EULER_SUM_HPP
#define MZV_EULER_SUM_HPP

#include <vector>

#include "mzv/ball.hpp"
#include "mzv/composition.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// zeta_x(s_1, ..., s_k) with signs: truncated nested sum, the truncation
/// tail added to the radius.  x < 1 gets a geometric bound; x = 1 uses the
/// integral bound (s_1 >= 2) or paired-term alternating bounds (sigma_1 =
/// -1).  Throws ErrorKind::Divergent on inadmissible input.
Ball euler_sum_eval(const SignedComposition& arg, Prec prec);

/// Iterated integral of a classical word from 0 to 1/2, i.e. the
/// zeta_{1/2} value of its composition (leading 1s allowed).
Ball word_value_at_half(const Word& w, Prec prec);

/// High-precision MZV through the Hoelder convolution at 1/2:
/// zeta(w) = sum over splits w = u v of
///   (integral to 1/2 of swap(reverse(u))) * (integral to 1/2 of v).
/// Requires s_1 >= 2; throws ErrorKind::Divergent otherwise.
Ball mzv_eval(const Composition& s, Prec prec);

/// Multiple polylogarithm Li_{s_1..s_k}(z_1..z_k), outermost index first.
/// Runs the truncated nested sum whenever every prefix product
/// |z_1...z_j| is certifiably < 1; otherwise falls back to the Euler-sum
/// path when the arguments are exact, z_1 real in [-1,1] and the rest
/// exactly +-1.  Throws ErrorKind::OutOfDomain when neither applies.
CBall multiple_polylog_eval(const std::vector<long>& s,
                            const std::vector<CBall>& z, Prec prec);

/// Values zeta_x(s) for the x-parametrized family used by the generating
/// function checks, evaluated through euler_sum_eval.
Ball zeta_x(const Composition& s, const Rat& x, Prec prec);

}  // namespace mzv

#endif
