#include "mzv/special_functions.hpp"

#include <cmath>

#include "mzv/symbolic.hpp"
#include "mzv/zeta_values.hpp"

namespace mzv {

namespace {

constexpr Prec kBoundPrec = 64;

Ball one_b(Prec p) { return Ball::from_long(1, p); }

// |ball| <= 2^e certifiably
bool below_2exp(const Ball& b, long e) {
  Ball u = abs(b).upper();
  if (u.mid_is_zero()) return true;
  return mpfr_get_exp(u.mid()) <= e;
}

CBall csin(const CBall& w) {
  return CBall(sin(w.real()) * cosh(w.imag()), cos(w.real()) * sinh(w.imag()));
}

bool is_exactly(const Ball& b, long v) {
  return b.is_exact() && mpfr_cmp_si(b.mid(), v) == 0;
}

}  // namespace

CBall sinc(const CBall& w, Prec prec) {
  if (w.is_exact() && w.real().mid_is_zero() && w.imag().mid_is_zero())
    return CBall(one_b(prec));
  return csin(w) / w;
}

CBall gauss_2f1(const CBall& a, const CBall& b, const CBall& c, const Ball& x,
                Prec prec) {
  Prec wp = prec + 16;
  // pole when c is an exact nonpositive integer
  if (c.is_exact() && c.imag().mid_is_zero() && mpfr_integer_p(c.real().mid()) &&
      mpfr_sgn(c.real().mid()) <= 0)
    throw MzvError(ErrorKind::Pole, "2F1 pole: c is a nonpositive integer");
  Ball ax = abs(x).upper();
  if (!surely_less(ax, one_b(kBoundPrec)))
    throw MzvError(ErrorKind::OutOfDomain, "2F1 needs |x| < 1");

  Ball aa = a.abs_upper();
  Ball bb = b.abs_upper();
  Ball cc = c.abs_upper();
  CBall xc(x);

  CBall term(one_b(wp));
  CBall acc = term;
  for (long n = 0; n < 200000; ++n) {
    CBall num = (a + CBall::from_long(n, wp)) * (b + CBall::from_long(n, wp));
    CBall den = (CBall::from_long(n + 1, wp)) * (c + CBall::from_long(n, wp));
    term *= xc * num / den;
    acc += term;
    if (n < 4) continue;
    // sup over m >= n of |x| (m+|a|)(m+|b|) / ((m+1)(m-|c|))
    Ball nb = Ball::from_long(n, kBoundPrec);
    if (!surely_less(cc, nb)) continue;
    Ball rho = ax * (one_b(kBoundPrec) + (aa + cc) / (nb - cc)) *
               (one_b(kBoundPrec) + bb / nb);
    if (!surely_less(rho, one_b(kBoundPrec))) continue;
    Ball mag = term.abs_upper() * rho / (one_b(kBoundPrec) - rho);
    if (below_2exp(mag, -(static_cast<long>(wp) + 2))) {
      acc.real().add_error(mag.upper());
      acc.imag().add_error(mag.upper());
      return acc;
    }
  }
  throw MzvError(ErrorKind::OutOfDomain, "2F1 series failed to converge");
}

CBall digamma_near_one(const CBall& w, Prec prec) {
  Prec wp = prec + 16;
  Ball r = w.abs_upper();
  if (!surely_less(r, one_b(kBoundPrec)))
    throw MzvError(ErrorKind::OutOfDomain, "digamma series needs |w| < 1");

  // K with 2 r^K / (1-r) <= 2^-(wp+2)
  double rd = std::min(0.9999, std::max(1e-300, r.mid_double()));
  long K = 8 + static_cast<long>((wp + 4) / -std::log2(rd));
  std::vector<Ball> zt = zeta_table(K, wp);

  CBall acc(-Ball::euler_gamma(wp));
  CBall wpow(one_b(wp));  // w^{k-1}
  for (long k = 2; k <= K; ++k) {
    wpow *= w;
    CBall term = wpow * CBall(zt[k - 2]);
    if (k % 2 != 0) term = -term;
    acc += term;
  }
  Ball tail = Ball::from_long(2, kBoundPrec) * pow_si(r, K) /
              (one_b(kBoundPrec) - r);
  acc.real().add_error(tail.upper());
  acc.imag().add_error(tail.upper());
  return acc;
}

CBall g_kernel(const CBall& z, Prec prec) {
  Prec wp = prec + 8;
  CBall iz(-z.imag(), z.real());
  CBall s = digamma_near_one(iz, wp) + digamma_near_one(-iz, wp) -
            digamma_near_one(z, wp) - digamma_near_one(-z, wp);
  return s * CBall(Ball::from_rat(Rat(1, 4), wp));
}

namespace {

// log Gamma(1 + w) = -gamma w + sum_{k>=2} (-1)^k zeta(k) w^k / k
CBall log_gamma_near_one(const CBall& w, Prec wp) {
  Ball r = w.abs_upper();
  if (!surely_less(r, one_b(kBoundPrec)))
    throw MzvError(ErrorKind::OutOfDomain, "log Gamma series needs |w| < 1");
  double rd = std::min(0.9999, std::max(1e-300, r.mid_double()));
  long K = 8 + static_cast<long>((wp + 4) / -std::log2(rd));
  std::vector<Ball> zt = zeta_table(K, wp);
  CBall acc = CBall(-Ball::euler_gamma(wp)) * w;
  CBall wpow = w;
  for (long k = 2; k <= K; ++k) {
    wpow *= w;
    CBall term = wpow * CBall(zt[k - 2] / Ball::from_long(k, wp));
    if (k % 2 != 0) term = -term;
    acc += term;
  }
  Ball tail = Ball::from_long(2, kBoundPrec) * pow_si(r, K + 1) /
              (one_b(kBoundPrec) - r);
  acc.real().add_error(tail.upper());
  acc.imag().add_error(tail.upper());
  return acc;
}

// log Gamma(1/2 + v) - log Gamma(1/2)
//   = (-gamma - 2 log 2) v + sum_{k>=2} (-1)^k (2^k - 1) zeta(k) v^k / k
CBall log_gamma_near_half(const CBall& v, Prec wp) {
  Ball r2 = (v.abs_upper() * Ball::from_long(2, kBoundPrec)).upper();
  if (!surely_less(r2, one_b(kBoundPrec)))
    throw MzvError(ErrorKind::OutOfDomain, "log Gamma half series needs |v| < 1/2");
  double rd = std::min(0.9999, std::max(1e-300, r2.mid_double()));
  long K = 8 + static_cast<long>((wp + 4) / -std::log2(rd));
  std::vector<Ball> zt = zeta_table(K, wp);
  CBall acc = CBall(-Ball::euler_gamma(wp) -
                    Ball::from_long(2, wp) * Ball::log_two(wp)) *
              v;
  CBall vpow = v;
  for (long k = 2; k <= K; ++k) {
    vpow *= v;
    Ball coeff = (Ball::from_int(int_pow(2, k) - 1, wp)) * zt[k - 2] /
                 Ball::from_long(k, wp);
    CBall term = vpow * CBall(coeff);
    if (k % 2 != 0) term = -term;
    acc += term;
  }
  Ball tail = Ball::from_long(2, kBoundPrec) * pow_si(r2, K + 1) /
              (one_b(kBoundPrec) - r2);
  acc.real().add_error(tail.upper());
  acc.imag().add_error(tail.upper());
  return acc;
}

}  // namespace

CBall a_of_z(const CBall& z, Prec prec) {
  Prec wp = prec + 16;
  CBall half(Ball::from_rat(Rat(1, 2), wp));
  CBall w = z * half;   // Gamma(1 + z/2)
  CBall v = -z * half;  // Gamma(1/2 - z/2)
  CBall log_a = -(log_gamma_near_one(w, wp) + log_gamma_near_half(v, wp));
  return exp(log_a);
}

CBall a_of_z_product(const CBall& z, long pairs, Prec prec) {
  Prec wp = prec + 16;
  long M = std::max<long>(pairs, 8);
  // paired factors: prod_{i=1}^{M} (1 - (z + z^2)/(2i(2i-1)))
  CBall zz = z + z * z;
  CBall prod(one_b(wp));
  Rat partial_u = 0;  // sum_{i<=M} (1/(2i-1) - 1/(2i))
  for (long i = 1; i <= M; ++i) {
    Rat u = Rat(1, 2 * i - 1) - Rat(1, 2 * i);
    partial_u += u;
    prod *= CBall(one_b(wp)) - zz * CBall(Ball::from_rat(u, wp));
  }
  // remaining product: exp(-(z+z^2) (log 2 - partial_u)) up to the
  // second-order correction, bounded by |z+z^2|^2 /(6 (2M-1)^3 (1-|w_M|))
  CBall t = CBall(Ball::log_two(wp) - Ball::from_rat(partial_u, wp));
  CBall expo = -zz * t;
  Ball z2 = zz.abs_upper();
  Ball wmax = (z2 * Ball::from_rat(Rat(1, (2 * M - 1) * 2 * M), kBoundPrec)).upper();
  Ball err = z2 * z2 /
             (Ball::from_long(6, kBoundPrec) *
              Ball::pow_ui(2 * M - 1, 3, kBoundPrec) * (one_b(kBoundPrec) - wmax));
  expo.real().add_error(err.upper());
  expo.imag().add_error(err.upper());
  return prod * exp(expo);
}

CBall y1_hyper(const Ball& x, const CBall& z, Prec prec) {
  if (is_exactly(x, 1)) {
    // F(z,-z;1;1) = 1/(Gamma(1+z)Gamma(1-z)) = sinc(pi z)
    CBall w = z * CBall(Ball::pi(prec + 8));
    return sinc(w, prec + 8);
  }
  return gauss_2f1(z, -z, CBall(one_b(prec + 8)), x, prec);
}

CBall y2_hyper(const Ball& x, const CBall& z, Prec prec) {
  Prec wp = prec + 8;
  if (is_exactly(x, 1)) return CBall::zero(wp);
  Ball omx = one_b(wp) - x;
  CBall one(one_b(wp));
  return CBall(omx) *
         gauss_2f1(one + z, one - z, CBall(Ball::from_long(2, wp)), omx, prec);
}

CBall u_hyper(const Ball& x, const CBall& z, Prec prec) {
  return y1_hyper(x, z, prec) - z * y2_hyper(x, z, prec);
}

std::pair<CBall, CBall> sinc_zeta_product(const Ball& t, long n, Prec prec) {
  if (n < 1) throw MzvError(ErrorKind::OutOfDomain, "need n >= 1");
  Prec wp = prec + 16;

  // lhs: sum_k (-1)^k t^{2kn} zeta({2n}^k), exact pi-power coefficients
  Ball lhs = Ball::zero(wp);
  Ball t2n = pow_si(t, 2 * n);
  Ball tpow = one_b(wp);
  for (long k = 0;; ++k) {
    ExactPiMultiple zk = pi_form_of_even_poly(period1_reduce(k).instantiate(2 * n));
    Ball term = tpow * evaluate_pi_multiple(zk, wp);
    if (k % 2 != 0) term = -term;
    lhs += term;
    tpow *= t2n;
    // terms shrink at least geometrically once t^{2n} zeta(2n) < 1
    Ball next = abs(tpow) * evaluate_pi_multiple(
                                pi_form_of_even_poly(
                                    period1_reduce(k + 1).instantiate(2 * n)),
                                kBoundPrec);
    Ball rho = abs(t2n) * Ball::from_long(2, kBoundPrec);  // >= t^{2n} zeta(2n)
    if (!surely_less(rho, one_b(kBoundPrec)))
      throw MzvError(ErrorKind::OutOfDomain, "sinc series needs t^{2n} zeta(2n) < 1");
    Ball bound = abs(next) / (one_b(kBoundPrec) - rho);
    if (below_2exp(bound, -(static_cast<long>(wp) + 2)) || k > 300) {
      lhs.add_error(bound.upper());
      break;
    }
  }

  // rhs: prod_{j=0}^{n-1} sinc(pi t rho^j), rho = exp(i pi / n)
  Ball pi_b = Ball::pi(wp);
  CBall rhs(one_b(wp));
  for (long j = 0; j < n; ++j) {
    Ball ang = pi_b * Ball::from_long(j, wp) / Ball::from_long(n, wp);
    CBall root(cos(ang), sin(ang));
    CBall w = root * CBall(pi_b * t);
    rhs *= sinc(w, wp);
  }
  return {CBall(lhs), rhs};
}

}  // namespace mzv
