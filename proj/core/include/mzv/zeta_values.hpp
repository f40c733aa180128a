#ifndef MZV_ZETA_VALUES_HPP
#define MZV_ZETA_VALUES_HPP

#include <vector>

#include "mzv/ball.hpp"

namespace mzv {

/// Riemann zeta at an integer s >= 2.  Even s goes through the exact
/// Bernoulli route; odd s through Euler-Maclaurin summation with a
/// rigorous tail.  Throws ErrorKind::Divergent for s <= 1.
Ball zeta_riemann(long s, Prec prec);

/// Euler-Maclaurin route regardless of parity (cross-check path).
Ball zeta_euler_maclaurin(long s, Prec prec);

/// zeta(2), ..., zeta(kmax) at the given precision (cached internally).
std::vector<Ball> zeta_table(long kmax, Prec prec);

/// True iff sum_{j<=r} re(s_j) > r for every prefix r: the region of
/// absolute convergence of the nested sum.
bool convergence_region(const std::vector<double>& realparts);

}  // namespace mzv

#endif
