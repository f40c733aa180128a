#ifndef MZV_QUADRATURE_HPP
#define MZV_QUADRATURE_HPP

#include <vector>

#include "mzv/ball.hpp"
#include "mzv/composition.hpp"

namespace mzv {

/// Gauss-Legendre nodes and weights on (-1, 1) at ball precision.
struct GaussLegendreRule {
  std::vector<Ball> nodes;
  std::vector<Ball> weights;
};

GaussLegendreRule gauss_legendre(long order, Prec prec);

/// Multiple polylogarithm Li_s(x_1, ..., x_k) through the Omega-derived
/// integral representation: a tensor Gauss-Legendre quadrature of
///   prod_j tau(prod_{m<=j} x_m u^{(m)}_{s_m}) du/u ...,  tau(x) = x/(1-x),
/// over the product of per-argument simplices.  The radius is an
/// order-doubling estimate and is NOT rigorous.  Depth <= 2, x_j in (0,1).
Ball new_integral_eval(const Composition& s, const std::vector<Rat>& xs,
                       long quad_order, Prec prec);

}  // namespace mzv

#endif
