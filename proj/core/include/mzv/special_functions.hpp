#ifndef MZV_SPECIAL_FUNCTIONS_HPP
#define MZV_SPECIAL_FUNCTIONS_HPP

#include <utility>

#include "mzv/ball.hpp"

namespace mzv {

/// Gauss hypergeometric F(a,b;c;x) for real |x| < 1 by partial sums with a
/// ratio-based geometric tail bound.  Throws ErrorKind::Pole when c is a
/// nonpositive integer, ErrorKind::OutOfDomain when |x| is not < 1.
CBall gauss_2f1(const CBall& a, const CBall& b, const CBall& c, const Ball& x,
                Prec prec);

/// psi(1 + w) = -gamma + sum_{k>=2} (-1)^k zeta(k) w^{k-1}, |w| < 1.
CBall digamma_near_one(const CBall& w, Prec prec);

/// G(z) = (psi(1+iz) + psi(1-iz) - psi(1+z) - psi(1-z)) / 4, |z| < 1.
CBall g_kernel(const CBall& z, Prec prec);

/// A(z) = Gamma(1/2) / (Gamma(1+z/2) Gamma(1/2 - z/2)) via the log-Gamma
/// zeta series around 1 and 1/2; |z| < 1.
CBall a_of_z(const CBall& z, Prec prec);

/// The same function through the product prod_j (1 + (-1)^j z / j),
/// truncated after 2*pairs factors with a tail enclosure.
CBall a_of_z_product(const CBall& z, long pairs, Prec prec);

/// Y1(x,z) = F(z,-z;1;x); at x = 1 this collapses to sinc(pi z).
CBall y1_hyper(const Ball& x, const CBall& z, Prec prec);
/// Y2(x,z) = (1-x) F(1+z,1-z;2;1-x); zero at x = 1.
CBall y2_hyper(const Ball& x, const CBall& z, Prec prec);
/// U(x,z) = Y1(x,z) - z Y2(x,z).
CBall u_hyper(const Ball& x, const CBall& z, Prec prec);

/// sinc w = sin(w)/w for complex w (1 at w = 0).
CBall sinc(const CBall& w, Prec prec);

/// Both sides of the sinc product identity at level n:
///   lhs = sum_k (-1)^k t^{2kn} zeta({2n}^k)   (exact pi-power coefficients)
///   rhs = prod_{j<n} sinc(pi t rho^j), rho = exp(i pi / n).
std::pair<CBall, CBall> sinc_zeta_product(const Ball& t, long n, Prec prec);

}  // namespace mzv

#endif
